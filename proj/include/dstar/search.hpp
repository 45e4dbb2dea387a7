#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "dstar/counting.hpp"
#include "dstar/graph.hpp"

namespace dstar {

// Labeled enumeration walks all 2^C(n,2) edge subsets; n is guarded to keep
// accidental runs desk-sized. The hard cap keeps edge masks in 64 bits.
constexpr int search_default_max_n = 8;
constexpr int search_absolute_max_n = 11;

struct DegreeSumCondition {
    enum class Scope { AdjacentPairs, NonAdjacentPairs };
    Scope scope;
    int offset;               // threshold is n + offset
    bool require_connected = false;
    bool forbid_isolated = false;
};

struct SearchOptions {
    int workers = 1;
    int witness_cap = 4;
    bool allow_big = false;   // lifts the n <= 8 guard up to the absolute cap
};

enum class Objective { MinEdges, MinTriangles, MaxDoubleStars };

struct SearchReport {
    Objective objective;
    int n;
    bool feasible;                       // false when no graph satisfies the condition
    Count extremum;
    std::vector<std::string> witnesses;  // graph6, lexicographically smallest first, capped
    std::uint64_t graphs_visited;
    std::uint64_t graphs_satisfying;
    double wall_seconds;                 // informational; never serialized
};

namespace detail {

inline void check_search_order(int n, bool allow_big) {
    int cap = allow_big ? search_absolute_max_n : search_default_max_n;
    if (n < 1 || n > cap)
        throw std::invalid_argument("search order " + std::to_string(n) +
                                    " out of range (cap " + std::to_string(cap) + ")");
}

// Edge bit i <-> pair (eu[i], ev[i]); column-major so bit order matches the
// graph6 stream order.
struct EdgeTable {
    int m = 0;
    std::array<int, 64> eu{}, ev{};
    explicit EdgeTable(int n) {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                eu[m] = u;
                ev[m] = v;
                ++m;
            }
    }
};

constexpr std::array<std::array<std::uint64_t, 12>, 12> small_binom = [] {
    std::array<std::array<std::uint64_t, 12>, 12> b{};
    for (int i = 0; i < 12; ++i) {
        b[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            b[i][j] = b[i - 1][j - 1] + (j <= i - 1 ? b[i - 1][j] : 0);
    }
    return b;
}();

// Mutable enumeration state: adjacency rows and degrees kept in sync with the
// partially decided edge mask.
struct MaskGraph {
    int n;
    std::uint64_t mask = 0;
    std::array<std::uint32_t, search_absolute_max_n> rows{};
    std::array<int, search_absolute_max_n> deg{};
    int edge_count = 0;

    explicit MaskGraph(int n_) : n(n_) {}

    void add(int u, int v, std::uint64_t bit) {
        mask |= bit;
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
        ++deg[u];
        ++deg[v];
        ++edge_count;
    }
    void remove(int u, int v, std::uint64_t bit) {
        mask &= ~bit;
        rows[u] &= ~(1u << v);
        rows[v] &= ~(1u << u);
        --deg[u];
        --deg[v];
        --edge_count;
    }
    bool closes_triangle(int u, int v) const { return (rows[u] & rows[v]) != 0; }

    bool connected() const {
        if (n <= 1) return true;
        std::uint32_t seen = 1, frontier = 1;
        while (frontier != 0) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= rows[v];
            }
            frontier = next & ~seen;
            seen |= frontier;
        }
        return seen == (1u << n) - 1;
    }

    long long triangles() const {
        long long three = 0;
        for (int v = 1; v < n; ++v) {
            std::uint32_t below = rows[v] & ((1u << v) - 1);
            while (below) {
                int u = std::countr_zero(below);
                below &= below - 1;
                three += std::popcount(rows[u] & rows[v]);
            }
        }
        return three / 3;
    }

    bool satisfies(const DegreeSumCondition& c) const {
        int need = n + c.offset;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                bool adj = (rows[u] >> v) & 1u;
                if (adj == (c.scope == DegreeSumCondition::Scope::AdjacentPairs) &&
                    deg[u] + deg[v] < need)
                    return false;
            }
        if (c.forbid_isolated)
            for (int v = 0; v < n; ++v)
                if (deg[v] == 0) return false;
        if (c.require_connected && !connected()) return false;
        return true;
    }

    Graph to_graph() const {
        Graph g(n);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if ((rows[u] >> v) & 1u) g.add_edge(u, v);
        return g;
    }
};

// Depth-first walk over the low `depth` edge bits, zero branch before one
// branch, so leaves appear in increasing mask order. Prune(g,u,v) may cut the
// include branch before the edge is added.
template <class Prune, class Visit>
void dfs_masks(MaskGraph& g, const EdgeTable& et, int depth, Prune&& prune, Visit&& visit) {
    if (depth == 0) {
        visit(g);
        return;
    }
    int i = depth - 1;
    dfs_masks(g, et, i, prune, visit);
    int u = et.eu[i], v = et.ev[i];
    if (!prune(g, u, v)) {
        g.add(u, v, std::uint64_t(1) << i);
        dfs_masks(g, et, i, prune, visit);
        g.remove(u, v, std::uint64_t(1) << i);
    }
}

struct NoPrune {
    bool operator()(const MaskGraph&, int, int) const { return false; }
};

// Bounded set of graph6 strings, smallest kept.
struct WitnessSet {
    int cap;
    std::vector<std::string> items;  // sorted ascending

    explicit WitnessSet(int cap_) : cap(cap_) {}

    void insert(const MaskGraph& g) {
        if (cap <= 0) return;
        std::string s = write_graph6(g.to_graph());
        auto it = std::lower_bound(items.begin(), items.end(), s);
        if (it != items.end() && *it == s) return;
        if (static_cast<int>(items.size()) == cap) {
            if (s >= items.back()) return;
            items.pop_back();
        }
        items.insert(std::lower_bound(items.begin(), items.end(), s), s);
    }

    void merge(const WitnessSet& o) {
        for (const auto& s : o.items) {
            auto it = std::lower_bound(items.begin(), items.end(), s);
            if (it != items.end() && *it == s) continue;
            items.insert(it, s);
        }
        if (static_cast<int>(items.size()) > cap) items.resize(cap);
    }
};

// Splits the mask space by the top j edge bits into 2^j ranges, hands ranges
// to a worker pool, and returns per-partition results in partition order so
// downstream merges are independent of scheduling.
template <class Result, class Job>
std::vector<Result> run_partitioned(int m, int workers, Job job) {
    if (workers < 1) workers = 1;
    int j = 0;
    while ((1 << j) < 4 * workers && j < m) ++j;
    int parts = 1 << j;
    std::vector<Result> results(parts);
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int p = next.fetch_add(1);
            if (p >= parts) break;
            results[p] = job(p, j);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

// Applies partition p's prefix (top j bits) to g, running prune on the way.
// Returns false if a pruned edge makes the whole partition empty.
template <class Prune>
bool apply_prefix(MaskGraph& g, const EdgeTable& et, int p, int j, Prune&& prune) {
    for (int b = 0; b < j; ++b) {
        int i = et.m - 1 - b;
        if ((p >> (j - 1 - b)) & 1) {
            int u = et.eu[i], v = et.ev[i];
            if (prune(g, u, v)) return false;
            g.add(u, v, std::uint64_t(1) << i);
        }
    }
    return true;
}

}  // namespace detail

struct EnumerationStats {
    std::uint64_t graphs_visited = 0;
    std::uint64_t subtrees_pruned = 0;
};

// Visits every labeled simple graph on n vertices once, in edge-mask integer
// order, unless prune cuts include-subtrees. visit receives the enumeration
// state; prune(state, u, v) is asked before edge (u,v) is committed.
template <class Prune, class Visit>
EnumerationStats enumerate_graphs(int n, Prune&& prune, Visit&& visit, bool allow_big = false) {
    detail::check_search_order(n, allow_big);
    detail::EdgeTable et(n);
    detail::MaskGraph g(n);
    EnumerationStats stats;
    auto counting_prune = [&](const detail::MaskGraph& mg, int u, int v) {
        if (prune(mg, u, v)) {
            ++stats.subtrees_pruned;
            return true;
        }
        return false;
    };
    detail::dfs_masks(g, et, et.m, counting_prune,
                      [&](const detail::MaskGraph& mg) {
                          ++stats.graphs_visited;
                          visit(mg);
                      });
    return stats;
}

inline bool triangle_prune(const detail::MaskGraph& g, int u, int v) {
    return g.closes_triangle(u, v);
}

// Maximum of the per-edge double-star count over all triangle-free graphs on
// n vertices. Enumeration prunes any subtree whose decided edges already
// close a triangle.
inline SearchReport max_double_stars_exhaustive(int n, DoubleStar ds,
                                                const SearchOptions& opts = {}) {
    detail::check_search_order(n, opts.allow_big);
    auto t0 = std::chrono::steady_clock::now();
    detail::EdgeTable et(n);

    struct Part {
        std::uint64_t visited = 0;
        bool any = false;
        std::uint64_t best = 0;
        detail::WitnessSet wit{0};
    };
    auto job = [&](int p, int j) {
        Part r;
        r.wit = detail::WitnessSet(opts.witness_cap);
        detail::MaskGraph g(n);
        if (!detail::apply_prefix(g, et, p, j, triangle_prune)) return r;
        detail::dfs_masks(g, et, et.m - j, triangle_prune, [&](const detail::MaskGraph& mg) {
            ++r.visited;
            std::uint64_t total = 0;
            // degrees are at most n-1 <= 10, so any star degree past the
            // table width contributes nothing
            std::uint64_t rest = ds.b < 12 ? mg.mask : 0;
            while (rest) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                int du = mg.deg[et.eu[i]], dv = mg.deg[et.ev[i]];
                const auto& B = detail::small_binom;
                if (ds.a == ds.b)
                    total += B[du - 1][ds.a] * B[dv - 1][ds.a];
                else
                    total += B[du - 1][ds.a] * B[dv - 1][ds.b] + B[du - 1][ds.b] * B[dv - 1][ds.a];
            }
            if (!r.any || total > r.best) {
                r.any = true;
                r.best = total;
                r.wit = detail::WitnessSet(opts.witness_cap);
                r.wit.insert(mg);
            } else if (total == r.best) {
                r.wit.insert(mg);
            }
        });
        return r;
    };
    auto parts = detail::run_partitioned<Part>(et.m, opts.workers, job);

    SearchReport rep{Objective::MaxDoubleStars, n, false, Count(0), {}, 0, 0, 0.0};
    detail::WitnessSet wit(opts.witness_cap);
    std::uint64_t best = 0;
    for (const auto& p : parts) {
        rep.graphs_visited += p.visited;
        if (!p.any) continue;
        if (!rep.feasible || p.best > best) {
            rep.feasible = true;
            best = p.best;
            wit = detail::WitnessSet(opts.witness_cap);
            wit.merge(p.wit);
        } else if (p.best == best) {
            wit.merge(p.wit);
        }
    }
    rep.graphs_satisfying = rep.graphs_visited;  // every visited graph is triangle-free
    rep.extremum = Count(best);
    rep.witnesses = wit.items;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace detail {

template <bool MinTriangles>
SearchReport min_under_condition(int n, const DegreeSumCondition& cond,
                                 const SearchOptions& opts) {
    check_search_order(n, opts.allow_big);
    auto t0 = std::chrono::steady_clock::now();
    EdgeTable et(n);

    struct Part {
        std::uint64_t visited = 0;
        std::uint64_t satisfying = 0;
        bool any = false;
        long long best = 0;
        WitnessSet wit{0};
    };
    auto job = [&](int p, int j) {
        Part r;
        r.wit = WitnessSet(opts.witness_cap);
        MaskGraph g(n);
        apply_prefix(g, et, p, j, NoPrune{});
        dfs_masks(g, et, et.m - j, NoPrune{}, [&](const MaskGraph& mg) {
            ++r.visited;
            if (!mg.satisfies(cond)) return;
            ++r.satisfying;
            long long obj = MinTriangles ? mg.triangles() : mg.edge_count;
            if (!r.any || obj < r.best) {
                r.any = true;
                r.best = obj;
                r.wit = WitnessSet(opts.witness_cap);
                r.wit.insert(mg);
            } else if (obj == r.best) {
                r.wit.insert(mg);
            }
        });
        return r;
    };
    auto parts = run_partitioned<Part>(et.m, opts.workers, job);

    SearchReport rep{MinTriangles ? Objective::MinTriangles : Objective::MinEdges,
                     n, false, Count(0), {}, 0, 0, 0.0};
    WitnessSet wit(opts.witness_cap);
    long long best = 0;
    for (const auto& p : parts) {
        rep.graphs_visited += p.visited;
        rep.graphs_satisfying += p.satisfying;
        if (!p.any) continue;
        if (!rep.feasible || p.best < best) {
            rep.feasible = true;
            best = p.best;
            wit = WitnessSet(opts.witness_cap);
            wit.merge(p.wit);
        } else if (p.best == best) {
            wit.merge(p.wit);
        }
    }
    rep.extremum = Count(best);
    rep.witnesses = wit.items;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace detail

inline SearchReport min_edges_under_condition(int n, const DegreeSumCondition& cond,
                                              const SearchOptions& opts = {}) {
    return detail::min_under_condition<false>(n, cond, opts);
}

inline SearchReport min_triangles_under_condition(int n, const DegreeSumCondition& cond,
                                                  const SearchOptions& opts = {}) {
    return detail::min_under_condition<true>(n, cond, opts);
}

struct LovaszSimonovitsReport {
    int n;
    std::uint64_t graphs_checked;
    std::uint64_t in_scope;     // e = floor(n^2/4) + k with 1 <= k < n/2
    std::uint64_t violations;   // in-scope graphs with fewer than k*floor(n/2) triangles
    std::uint64_t tight;        // in-scope graphs meeting the bound exactly
    std::vector<std::string> tight_witnesses;
    double wall_seconds;
};

// Checks t3 >= k*floor(n/2) for every graph with floor(n^2/4)+k edges,
// 1 <= k < n/2, over the full labeled enumeration.
inline LovaszSimonovitsReport verify_lovasz_simonovits(int n, const SearchOptions& opts = {}) {
    detail::check_search_order(n, opts.allow_big);
    auto t0 = std::chrono::steady_clock::now();
    detail::EdgeTable et(n);
    const int quarter = n * n / 4;
    const int half = n / 2;

    struct Part {
        std::uint64_t visited = 0, in_scope = 0, violations = 0, tight = 0;
        detail::WitnessSet wit{0};
    };
    auto job = [&](int p, int j) {
        Part r;
        r.wit = detail::WitnessSet(opts.witness_cap);
        detail::MaskGraph g(n);
        detail::apply_prefix(g, et, p, j, detail::NoPrune{});
        detail::dfs_masks(g, et, et.m - j, detail::NoPrune{}, [&](const detail::MaskGraph& mg) {
            ++r.visited;
            int k = mg.edge_count - quarter;
            if (k < 1 || 2 * k >= n) return;
            ++r.in_scope;
            long long t3 = mg.triangles();
            long long need = static_cast<long long>(k) * half;
            if (t3 < need) ++r.violations;
            else if (t3 == need) {
                ++r.tight;
                r.wit.insert(mg);
            }
        });
        return r;
    };
    auto parts = detail::run_partitioned<Part>(et.m, opts.workers, job);

    LovaszSimonovitsReport rep{n, 0, 0, 0, 0, {}, 0.0};
    detail::WitnessSet wit(opts.witness_cap);
    for (const auto& p : parts) {
        rep.graphs_checked += p.visited;
        rep.in_scope += p.in_scope;
        rep.violations += p.violations;
        rep.tight += p.tight;
        wit.merge(p.wit);
    }
    rep.tight_witnesses = wit.items;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace dstar
