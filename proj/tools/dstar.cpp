#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dstar/bounds.hpp"
#include "dstar/constructions.hpp"
#include "dstar/counting.hpp"
#include "dstar/graph.hpp"
#include "dstar/report_json.hpp"
#include "dstar/search.hpp"
#include "dstar/verify.hpp"

namespace {

std::pair<int, int> parse_int_pair(const std::string& s, const char* what) {
    size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument(std::string(what) + " expects the form A,B");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": cannot parse '" + s + "' as A,B");
    }
}

std::vector<dstar::Graph> read_graph6_lines(const std::string& path) {
    std::vector<dstar::Graph> graphs;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(dstar::parse_graph6(line));
    }
    return graphs;
}

int default_workers() {
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

std::string fmt3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

void print_construct_summary(const dstar::Graph& g, int cond_k, bool json) {
    auto degs = g.degree_multiset();
    bool nonadj = dstar::satisfies_nonadjacent_condition(g, 1);
    bool adj = dstar::satisfies_adjacent_condition(g, cond_k);
    if (json) {
        dstar::Json j{{"n", g.order()},
                      {"edges", g.edge_count()},
                      {"triangles", dstar::count_str(g.count_triangles())},
                      {"degree_multiset", degs},
                      {"nonadjacent_condition_k1", nonadj},
                      {"adjacent_condition_k", cond_k},
                      {"adjacent_condition", adj}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "n " << g.order() << "\nedges " << g.edge_count() << "\ntriangles "
              << g.count_triangles() << "\ndegrees";
    for (int d : degs) std::cout << ' ' << d;
    std::cout << "\nnonadjacent condition (k=1): " << (nonadj ? "yes" : "no")
              << "\nadjacent condition (k=" << cond_k << "): " << (adj ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact double-star counting and degree-sum extremal verification"};
    app.require_subcommand(1);

    // count
    auto* c = app.add_subcommand("count", "count double stars in a graph");
    std::string c_graph6, c_bipartite, c_star, c_mode = "auto";
    int c_turan = 0;
    bool c_check = false;
    c->add_option("--graph6", c_graph6, "graph6 file, one graph per line, - for stdin");
    c->add_option("--bipartite", c_bipartite, "complete bipartite graph, part sizes X,Y");
    c->add_option("--turan", c_turan, "balanced complete bipartite graph on N vertices");
    c->add_option("--star", c_star, "double star degrees A,B")->required();
    c->add_option("--mode", c_mode, "formula, oracle, or auto (default)")
        ->check(CLI::IsMember({"formula", "oracle", "auto"}));
    c->add_flag("--check", c_check, "run both formula and oracle, report agreement");

    // construct
    auto* k = app.add_subcommand("construct", "build an extremal graph and report its properties");
    std::string k_kind, k_out, k_bipartite;
    int k_n = 0, k_k = 1;
    bool k_json = false, k_edges = false;
    k->add_option("kind", k_kind, "bipartite | turan | adjacent | nonadjacent-edges | even-light")
        ->required();
    k->add_option("--n", k_n, "number of vertices");
    k->add_option("--k", k_k, "degree-sum offset (adjacent construction)");
    k->add_option("--parts", k_bipartite, "part sizes X,Y (bipartite construction)");
    k->add_option("--out", k_out, "write the graph to this file");
    k->add_flag("--edges", k_edges, "emit an edge list (u v per line) instead of graph6");
    k->add_flag("--json", k_json, "machine-readable summary");

    // table
    auto* t = app.add_subcommand("table", "optimal continuous split for each star pair");
    double t_tol = 1e-9;
    std::string t_csv;
    t->add_option("--tol", t_tol, "refinement tolerance");
    t->add_option("--csv", t_csv, "write CSV here (- for stdout) instead of aligned text");

    // verify
    auto* v = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite;
    int v_nmax = 7;
    dstar::SearchOptions v_opts;
    v_opts.workers = default_workers();
    bool v_json = false;
    v->add_option("suite", v_suite,
                  "doublestar | adjacent | nonadjacent-edges | nonadjacent-triangles | ls-fact | all")
        ->required();
    v->add_option("--nmax", v_nmax, "largest order to verify exhaustively");
    v->add_option("--workers", v_opts.workers, "worker threads");
    v->add_option("--witness-cap", v_opts.witness_cap, "witnesses kept per search");
    v->add_flag("--allow-big", v_opts.allow_big, "lift the n <= 8 search guard");
    v->add_flag("--json", v_json, "emit the suite report as JSON");

    // search
    auto* s = app.add_subcommand("search", "exhaustive extremal search over labeled graphs");
    int s_n = 0;
    std::string s_objective, s_scope = "nonadjacent", s_star, s_witness_out;
    int s_offset = 1;
    bool s_connected = false, s_no_isolated = false, s_json = false;
    dstar::SearchOptions s_opts;
    s_opts.workers = default_workers();
    s->add_option("--n", s_n, "number of vertices")->required();
    s->add_option("--objective", s_objective, "min-edges | min-triangles | max-double-stars")
        ->required()
        ->check(CLI::IsMember({"min-edges", "min-triangles", "max-double-stars"}));
    s->add_option("--scope", s_scope, "adjacent | nonadjacent (degree-sum scope)")
        ->check(CLI::IsMember({"adjacent", "nonadjacent"}));
    s->add_option("--offset", s_offset, "degree-sum threshold is n + offset");
    s->add_flag("--connected", s_connected, "require connected graphs");
    s->add_flag("--no-isolated", s_no_isolated, "forbid isolated vertices");
    s->add_option("--star", s_star, "double star degrees A,B (max-double-stars)");
    s->add_option("--workers", s_opts.workers, "worker threads");
    s->add_option("--witness-cap", s_opts.witness_cap, "witnesses kept");
    s->add_flag("--allow-big", s_opts.allow_big, "lift the n <= 8 guard (hard cap 11)");
    s->add_option("--witness-out", s_witness_out, "write witness graph6 lines here");
    s->add_flag("--json", s_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*c) {
            dstar::DoubleStar ds = [&] {
                auto [a, b] = parse_int_pair(c_star, "--star");
                return dstar::DoubleStar(a, b);
            }();
            if (!c_bipartite.empty() && !c_check) {
                auto [x, y] = parse_int_pair(c_bipartite, "--bipartite");
                if (c_mode == "oracle")
                    std::cout << dstar::count_double_stars_oracle(dstar::complete_bipartite(x, y), ds)
                              << "\n";
                else
                    std::cout << dstar::count_double_stars_bipartite(x + y, x, ds) << "\n";
                return 0;
            }
            std::vector<dstar::Graph> graphs;
            if (!c_bipartite.empty()) {
                auto [x, y] = parse_int_pair(c_bipartite, "--bipartite");
                graphs.push_back(dstar::complete_bipartite(x, y));
            } else if (c_turan > 0) {
                graphs.push_back(dstar::turan_bipartite(c_turan));
            } else if (!c_graph6.empty()) {
                graphs = read_graph6_lines(c_graph6);
            } else {
                throw std::invalid_argument("count: need --graph6, --bipartite, or --turan");
            }
            bool all_agree = true;
            for (const auto& g : graphs) {
                if (c_check) {
                    dstar::Count f = dstar::count_double_stars_trianglefree(g, ds);
                    dstar::Count o = dstar::count_double_stars_oracle(g, ds);
                    bool agree = f == o;
                    all_agree = all_agree && agree;
                    std::cout << "formula " << f << " oracle " << o
                              << (agree ? " agree" : " DISAGREE") << "\n";
                    continue;
                }
                if (c_mode == "formula")
                    std::cout << dstar::count_double_stars_trianglefree(g, ds) << "\n";
                else if (c_mode == "oracle")
                    std::cout << dstar::count_double_stars_oracle(g, ds) << "\n";
                else
                    std::cout << (g.is_triangle_free()
                                      ? dstar::count_double_stars_trianglefree(g, ds)
                                      : dstar::count_double_stars_oracle(g, ds))
                              << "\n";
            }
            return all_agree ? 0 : 1;
        }

        if (*k) {
            dstar::Graph g;
            int cond_k = 1;
            if (k_kind == "bipartite") {
                auto [x, y] = parse_int_pair(k_bipartite, "--parts");
                g = dstar::complete_bipartite(x, y);
            } else if (k_kind == "turan") {
                g = dstar::turan_bipartite(k_n);
            } else if (k_kind == "adjacent") {
                g = dstar::adjacent_extremal(k_n, k_k);
                cond_k = k_k;
            } else if (k_kind == "nonadjacent-edges") {
                g = dstar::nonadjacent_edge_extremal(k_n);
            } else if (k_kind == "even-light") {
                g = dstar::even_triangle_light(k_n);
            } else {
                throw std::invalid_argument("unknown construction: " + k_kind);
            }
            std::ostringstream enc;
            if (k_edges) {
                for (auto [u, v] : g.edges()) enc << u << ' ' << v << "\n";
            } else {
                enc << dstar::write_graph6(g) << "\n";
            }
            if (!k_out.empty()) {
                std::ofstream out(k_out);
                if (!out) throw std::invalid_argument("cannot open " + k_out);
                out << enc.str();
            } else {
                std::cout << enc.str();
            }
            print_construct_summary(g, cond_k, k_json);
            return 0;
        }

        if (*t) {
            auto grid = dstar::table_xmax(6, 9, t_tol);
            if (!t_csv.empty()) {
                std::ostringstream csv;
                csv << "a";
                for (int b = 1; b <= 9; ++b) csv << ",b=" << b;
                csv << "\n";
                for (int a = 1; a <= 6; ++a) {
                    csv << a;
                    for (int b = 1; b <= 9; ++b) {
                        csv << ',';
                        if (b >= a) csv << fmt3(grid[a][b]);
                    }
                    csv << "\n";
                }
                if (t_csv == "-") {
                    std::cout << csv.str();
                } else {
                    std::ofstream out(t_csv);
                    if (!out) throw std::invalid_argument("cannot open " + t_csv);
                    out << csv.str();
                }
                return 0;
            }
            std::printf("%-6s", "");
            for (int b = 1; b <= 9; ++b) std::printf("%8s", ("b=" + std::to_string(b)).c_str());
            std::printf("\n");
            for (int a = 1; a <= 6; ++a) {
                std::printf("a=%-4d", a);
                for (int b = 1; b <= 9; ++b) {
                    if (b < a) {
                        std::printf("%8s", "");
                    } else if (grid[a][b] == 0.5) {
                        std::printf("%8s", "1/2");  // boundary tie, exact
                    } else {
                        std::printf("%8s", fmt3(grid[a][b]).c_str());
                    }
                }
                std::printf("\n");
            }
            return 0;
        }

        if (*v) {
            std::vector<dstar::SuiteResult> suites;
            if (v_suite == "doublestar") suites.push_back(dstar::verify_doublestar(v_nmax, v_opts));
            else if (v_suite == "adjacent") suites.push_back(dstar::verify_adjacent(v_nmax, v_opts));
            else if (v_suite == "nonadjacent-edges")
                suites.push_back(dstar::verify_nonadjacent_edges(v_nmax, v_opts));
            else if (v_suite == "nonadjacent-triangles")
                suites.push_back(dstar::verify_nonadjacent_triangles(v_nmax, v_opts));
            else if (v_suite == "ls-fact") suites.push_back(dstar::verify_ls_fact(v_nmax, v_opts));
            else if (v_suite == "all") suites = dstar::verify_all(v_nmax, v_opts);
            else throw std::invalid_argument("unknown suite: " + v_suite);

            bool all_pass = true;
            if (v_json) {
                dstar::Json out = dstar::Json::array();
                for (const auto& su : suites) out.push_back(dstar::to_json(su));
                std::cout << out.dump(2) << "\n";
            }
            for (const auto& su : suites) {
                all_pass = all_pass && su.all_pass();
                if (!v_json) {
                    std::cout << "suite " << su.suite << " (nmax " << su.nmax << ")\n";
                    for (const auto& cl : su.claims)
                        std::cout << "  [" << cl.status << "] " << cl.id << "\n";
                }
            }
            if (!v_json)
                std::cout << (all_pass ? "all suites passed" : "FAILURES present") << "\n";
            return all_pass ? 0 : 1;
        }

        if (*s) {
            dstar::SearchReport rep;
            if (s_objective == "max-double-stars") {
                if (s_star.empty())
                    throw std::invalid_argument("max-double-stars needs --star A,B");
                auto [a, b] = parse_int_pair(s_star, "--star");
                rep = dstar::max_double_stars_exhaustive(s_n, dstar::DoubleStar(a, b), s_opts);
            } else {
                dstar::DegreeSumCondition cond{
                    s_scope == "adjacent" ? dstar::DegreeSumCondition::Scope::AdjacentPairs
                                          : dstar::DegreeSumCondition::Scope::NonAdjacentPairs,
                    s_offset, s_connected, s_no_isolated};
                rep = s_objective == "min-edges"
                          ? dstar::min_edges_under_condition(s_n, cond, s_opts)
                          : dstar::min_triangles_under_condition(s_n, cond, s_opts);
            }
            if (!s_witness_out.empty()) {
                std::ofstream out(s_witness_out);
                if (!out) throw std::invalid_argument("cannot open " + s_witness_out);
                for (const auto& w : rep.witnesses) out << w << "\n";
            }
            if (s_json) {
                std::cout << dstar::to_json(rep).dump(2) << "\n";
            } else {
                std::cout << dstar::objective_name(rep.objective) << " n=" << rep.n;
                if (rep.feasible) std::cout << " extremum=" << rep.extremum;
                else std::cout << " infeasible";
                std::cout << " visited=" << rep.graphs_visited
                          << " satisfying=" << rep.graphs_satisfying << " ("
                          << rep.wall_seconds << "s)\n";
                for (const auto& w : rep.witnesses) std::cout << "witness " << w << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
