#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dstar/graph.hpp"

namespace dstar {

inline Graph complete_bipartite(int x, int y) {
    if (x < 0 || y < 0 || x + y > Graph::max_n)
        throw std::invalid_argument("complete_bipartite: bad part sizes");
    Graph g(x + y);
    for (int u = 0; u < x; ++u)
        for (int v = 0; v < y; ++v) g.add_edge(u, x + v);
    return g;
}

inline Graph turan_bipartite(int n) { return complete_bipartite(n / 2, n - n / 2); }

namespace detail {

inline void audit_degrees(const Graph& g, std::vector<int> expected, const char* who) {
    std::sort(expected.begin(), expected.end());
    if (g.degree_multiset() != expected)
        throw std::logic_error(std::string(who) + ": degree audit failed");
}

}  // namespace detail

// Clique on k+1 vertices, every other vertex joined to all of the clique.
// Clique degrees n-1, attachment degrees k+1, so every edge has degree sum
// at least n+k.
inline Graph adjacent_extremal(int n, int k) {
    if (k < 1 || n < k + 2 || n > Graph::max_n)
        throw std::invalid_argument("adjacent_extremal: need 1 <= k, k+2 <= n <= capacity");
    Graph g(n);
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);
    for (int w = k + 1; w < n; ++w)
        for (int u = 0; u <= k; ++u) g.add_edge(u, w);
    std::vector<int> expect(n, k + 1);
    for (int u = 0; u <= k; ++u) expect[u] = n - 1;
    detail::audit_degrees(g, expect, "adjacent_extremal");
    return g;
}

// Minimal-edge graph satisfying d(x)+d(y) >= n+1 for all non-adjacent x != y,
// one construction per residue of n mod 4.
inline Graph nonadjacent_edge_extremal(int n) {
    if (n < 3 || n > Graph::max_n)
        throw std::invalid_argument("nonadjacent_edge_extremal: need 3 <= n <= capacity");
    Graph g(n);
    std::vector<int> expect;

    switch (n % 4) {
    case 3: {  // n = 4k-1: K_{2k,2k-1} plus perfect matching in the 2k part, 2k-regular
        int k = (n + 1) / 4;
        g = complete_bipartite(2 * k, 2 * k - 1);
        for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
        expect.assign(n, 2 * k);
        break;
    }
    case 1: {  // n = 4k+1: K_{2k,2k+1} plus semi-matching in the 2k+1 part
        int k = (n - 1) / 4;
        int base = 2 * k;  // first vertex of the odd part
        g = complete_bipartite(2 * k, 2 * k + 1);
        for (int i = 0; i < k; ++i) g.add_edge(base + 2 * i, base + 2 * i + 1);
        g.add_edge(base + 2 * k, base);  // leftover vertex attached to vertex 0 of its part
        expect.assign(n, 2 * k + 1);
        expect[base] = 2 * k + 2;
        break;
    }
    case 2: {  // n = 4k+2: K_{2k} u K_{2k+2}, cross edges, minus a matching
        int k = (n - 2) / 4;
        auto U = [](int i) { return i - 1; };               // u_1..u_2k
        auto V = [k](int j) { return 2 * k + j - 1; };      // v_1..v_{2k+2}
        for (int i = 1; i <= 2 * k; ++i)
            for (int j = i + 1; j <= 2 * k; ++j) g.add_edge(U(i), U(j));
        std::vector<std::vector<bool>> vedge(2 * k + 3, std::vector<bool>(2 * k + 3, false));
        for (int i = 1; i <= 2 * k + 2; ++i)
            for (int j = i + 1; j <= 2 * k + 2; ++j) vedge[i][j] = true;
        for (int j = 2; j + 1 <= 2 * k - 1; j += 2) vedge[j][j + 1] = false;  // drop v2v3, v4v5, ...
        for (int i = 1; i <= 2 * k + 2; ++i)
            for (int j = i + 1; j <= 2 * k + 2; ++j)
                if (vedge[i][j]) g.add_edge(V(i), V(j));
        for (int i = 1; i <= 2 * k - 2; ++i) {
            g.add_edge(U(i), V(i));
            g.add_edge(U(i), V(i + 1));
        }
        for (int i = 2 * k - 1; i <= 2 * k; ++i) {
            g.add_edge(U(i), V(i));
            g.add_edge(U(i), V(i + 2));
        }
        expect.assign(n, 2 * k + 2);
        for (int i = 1; i <= 2 * k; ++i) expect[U(i)] = 2 * k + 1;
        break;
    }
    default: {  // n = 4k: K_{2k-2} u K_{2k+2}, cross edges, minus a 3-regular graph
        int k = n / 4;
        if (k == 1) {  // K4
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
            expect.assign(4, 3);
            break;
        }
        if (k == 2) {  // K2 u K6 with 6 cross edges, minus the path v0v1v2v3
            for (int i = 2; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j) g.add_edge(i, j);
            g.add_edge(0, 1);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 3; ++j) g.add_edge(i, 2 + i + j);
            Graph h(8);
            for (auto [u, v] : g.edges()) {
                bool onpath = (u >= 2 && v >= 2 && v == u + 1 && u <= 4);
                if (!onpath) h.add_edge(u, v);
            }
            g = h;
            expect.assign(8, 5);
            expect[0] = expect[1] = 4;
            break;
        }
        int m = 2 * k - 2;  // small clique u_0..u_{m-1}; big clique v_0..v_{2k+1}
        auto V = [m](int j) { return m + j; };
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
        // big clique minus the circulant 3-regular graph on v_0..v_{m-1}
        // with offsets {1, k-1}; offset k-1 is a perfect matching since m is even
        std::vector<std::vector<bool>> drop(2 * k + 2, std::vector<bool>(2 * k + 2, false));
        for (int i = 0; i < m; ++i) {
            drop[std::min(i, (i + 1) % m)][std::max(i, (i + 1) % m)] = true;
            drop[std::min(i, (i + k - 1) % m)][std::max(i, (i + k - 1) % m)] = true;
        }
        for (int i = 0; i < 2 * k + 2; ++i)
            for (int j = i + 1; j < 2 * k + 2; ++j)
                if (!drop[i][j]) g.add_edge(V(i), V(j));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < 3; ++j) g.add_edge(i, V((i + j) % m));
        expect.assign(n, 2 * k + 1);
        for (int i = 0; i < m; ++i) expect[i] = 2 * k;
        break;
    }
    }
    detail::audit_degrees(g, expect, "nonadjacent_edge_extremal");
    return g;
}

// Even-order graph meeting the non-adjacent condition with few triangles:
// n = 4l gets K_{2l,2l} plus a perfect matching in each part, n = 4l+2 gets
// K_{2l,2l+2} plus a cycle through the larger part. Both are (n/2+1)-regular.
inline Graph even_triangle_light(int n) {
    if (n < 4 || n % 2 != 0 || n > Graph::max_n)
        throw std::invalid_argument("even_triangle_light: need even 4 <= n <= capacity");
    Graph g(n);
    if (n % 4 == 0) {
        int l = n / 4;
        g = complete_bipartite(2 * l, 2 * l);
        for (int i = 0; i < l; ++i) {
            g.add_edge(2 * i, 2 * i + 1);
            g.add_edge(2 * l + 2 * i, 2 * l + 2 * i + 1);
        }
    } else {
        int l = (n - 2) / 4;
        int big = 2 * l + 2;
        g = complete_bipartite(2 * l, big);
        for (int i = 0; i < big; ++i) g.add_edge(2 * l + i, 2 * l + (i + 1) % big);
    }
    detail::audit_degrees(g, std::vector<int>(n, n / 2 + 1), "even_triangle_light");
    return g;
}

// Does the degree-sum threshold d(x)+d(y) >= n+k hold on the chosen scope?
inline bool satisfies_adjacent_condition(const Graph& g, int k) {
    int n = g.order();
    for (auto [u, v] : g.edges())
        if (g.degree(u) + g.degree(v) < n + k) return false;
    return true;
}

inline bool satisfies_nonadjacent_condition(const Graph& g, int k) {
    int n = g.order();
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n + k) return false;
    return true;
}

}  // namespace dstar
