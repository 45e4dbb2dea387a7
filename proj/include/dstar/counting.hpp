#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>

#include "dstar/graph.hpp"

namespace dstar {

namespace detail {

// Pascal triangle rows 0..67 fit in uint64 (C(67,33) < 2^64, C(68,34) does not).
inline const std::uint64_t* pascal_row(int x) {
    static const auto table = [] {
        auto t = std::make_unique<std::array<std::array<std::uint64_t, 68>, 68>>();
        for (int i = 0; i < 68; ++i) {
            (*t)[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                (*t)[i][j] = (*t)[i - 1][j - 1] + (j <= i - 1 ? (*t)[i - 1][j] : 0);
            for (int j = i + 1; j < 68; ++j) (*t)[i][j] = 0;
        }
        return t;
    }();
    return (*table)[x].data();
}

}  // namespace detail

// C(x,r), exact, with C(x,r) = 0 whenever x < r or x < 0.
inline Count binom(long long x, long long r) {
    if (r < 0) throw std::invalid_argument("binom: negative r");
    if (x < 0 || x < r) return Count(0);
    if (x < 68) return Count(detail::pascal_row(static_cast<int>(x))[r]);
    if (r > x - r) r = x - r;
    Count res(1);
    for (long long i = 1; i <= r; ++i) {
        res *= (x - r + i);
        res /= i;  // exact: res is C(x-r+i, i) after each step
    }
    return res;
}

// Two stars of degrees a and b joined by an edge between their centers.
struct DoubleStar {
    int a, b;
    DoubleStar(int a_, int b_) : a(a_), b(b_) {
        if (a < 1 || b < 1) throw std::invalid_argument("double star degrees must be >= 1");
        if (a > b) std::swap(a, b);
    }
    bool symmetric() const { return a == b; }
};

// Copies with a given central edge whose endpoint degrees are du, dv.
// The a = b case is a single product; the two-term sum would count each
// symmetric copy twice.
inline Count stars_on_edge(long long du, long long dv, DoubleStar ds) {
    if (ds.symmetric()) return binom(du - 1, ds.a) * binom(dv - 1, ds.a);
    return binom(du - 1, ds.a) * binom(dv - 1, ds.b) + binom(du - 1, ds.b) * binom(dv - 1, ds.a);
}

// Per-edge formula; valid only when adjacent endpoints share no neighbor.
inline Count count_double_stars_trianglefree(const Graph& g, DoubleStar ds) {
    if (!g.is_triangle_free())
        throw std::invalid_argument("per-edge double star formula requires a triangle-free graph");
    Count total(0);
    for (auto [u, v] : g.edges()) total += stars_on_edge(g.degree(u), g.degree(v), ds);
    return total;
}

// Brute-force subgraph count, any graph. For each ordered edge (u,v) pick the
// a-leaf set A inside N(u)\{v} explicitly; the b-leaf set only matters through
// its size, so it contributes C(|N(v)\{u}\A|, b). Ordered total halved when
// a = b since each symmetric copy is found from both orientations.
inline Count count_double_stars_oracle(const Graph& g, DoubleStar ds) {
    const int n = g.order();
    Count ordered(0);
    for (auto [u, v] : g.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            int cu = dir == 0 ? u : v;
            int cv = dir == 0 ? v : u;
            auto nu = g.neighbors(cu);
            nu.reset(cv);
            auto nv = g.neighbors(cv);
            nv.reset(cu);
            std::vector<int> cand;
            for (int w = 0; w < n; ++w)
                if (nu.test(w)) cand.push_back(w);
            int m = static_cast<int>(cand.size());
            if (m < ds.a) continue;
            // enumerate size-a subsets of cand by index mask walk
            std::vector<int> idx(ds.a);
            for (int i = 0; i < ds.a; ++i) idx[i] = i;
            while (true) {
                auto rest = nv;
                for (int i : idx) rest.reset(cand[i]);
                ordered += binom(static_cast<long long>(rest.count()), ds.b);
                int i = ds.a - 1;
                while (i >= 0 && idx[i] == m - ds.a + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < ds.a; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if (ds.symmetric()) ordered /= 2;
    return ordered;
}

// n(S_{a,b}, K_{x,n-x}) in closed form: x(n-x) edges, all alike.
inline Count count_double_stars_bipartite(long long n, long long x, DoubleStar ds) {
    if (x < 0 || x > n) throw std::invalid_argument("bipartite split out of range");
    if (x == 0 || x == n) return Count(0);
    return Count(x) * Count(n - x) * stars_on_edge(x, n - x, ds);
}

}  // namespace dstar
