#pragma once

#include <string>

#include <json.hpp>

#include "dstar/search.hpp"

namespace dstar {

using Json = nlohmann::json;  // std::map-backed, so dumped keys are sorted

// Counts may exceed 64 bits, so they serialize as decimal strings.
inline std::string count_str(const Count& c) { return c.str(); }

inline const char* objective_name(Objective o) {
    switch (o) {
    case Objective::MinEdges: return "min_edges";
    case Objective::MinTriangles: return "min_triangles";
    default: return "max_double_stars";
    }
}

// Wall time is deliberately left out: reports must be byte-identical across
// runs and worker counts.
inline Json to_json(const SearchReport& r) {
    Json j{{"objective", objective_name(r.objective)},
           {"n", r.n},
           {"feasible", r.feasible},
           {"witnesses", r.witnesses},
           {"graphs_visited", r.graphs_visited},
           {"graphs_satisfying", r.graphs_satisfying}};
    j["extremum"] = r.feasible ? Json(count_str(r.extremum)) : Json();
    return j;
}

inline Json to_json(const LovaszSimonovitsReport& r) {
    return Json{{"n", r.n},
                {"graphs_checked", r.graphs_checked},
                {"in_scope", r.in_scope},
                {"violations", r.violations},
                {"tight", r.tight},
                {"tight_witnesses", r.tight_witnesses}};
}

}  // namespace dstar
