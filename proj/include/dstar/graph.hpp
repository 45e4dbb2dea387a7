#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dstar {

using Count = boost::multiprecision::cpp_int;

// Simple undirected graph, dense 0-indexed vertices, adjacency rows as bitsets.
// Immutable after construction apart from add_edge used by builders.
class Graph {
public:
    static constexpr int max_n = 256;

    Graph() : n_(0) {}

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(check_order(n))) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].test(v);
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].count());
    }

    const std::bitset<max_n>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                if (adj_[v].test(u)) e.emplace_back(u, v);
        return e;
    }

    std::vector<int> degree_multiset() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    // Number of triangles: sum of |N(u) cap N(v)| over edges, each triangle hit 3 times.
    Count count_triangles() const {
        long long three = 0;
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                if (adj_[v].test(u)) three += static_cast<long long>((adj_[u] & adj_[v]).count());
        return Count(three / 3);
    }

    bool is_triangle_free() const {
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                if (adj_[v].test(u) && (adj_[u] & adj_[v]).any()) return false;
        return true;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        std::bitset<max_n> seen, frontier;
        frontier.set(0);
        seen.set(0);
        while (frontier.any()) {
            std::bitset<max_n> next;
            for (int v = 0; v < n_; ++v)
                if (frontier.test(v)) next |= adj_[v];
            frontier = next & ~seen;
            seen |= frontier;
        }
        return static_cast<int>(seen.count()) == n_;
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[v].none()) return true;
        return false;
    }

    Graph complement() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v) {
            for (int u = 0; u < n_; ++u)
                if (u != v && !adj_[v].test(u)) g.adj_[v].set(u);
        }
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    static int check_order(int n) {
        if (n < 0 || n > max_n)
            throw std::invalid_argument("graph order out of range: " + std::to_string(n));
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }

    int n_;
    std::vector<std::bitset<max_n>> adj_;
};

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

struct Graph6ParseError : std::runtime_error {
    size_t offset;  // byte position in the input string
    Graph6ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " at byte " + std::to_string(off)), offset(off) {}
};

// graph6: header-less ASCII encoding. Order prefix is n+63 for n <= 62,
// '~' plus three bytes for 63 <= n <= 258047. Edge bits are the upper
// triangle column by column, packed 6 per byte, first bit most significant.
inline std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int bits = 0, val = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            val = (val << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + val));
                bits = 0;
                val = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (val << (6 - bits))));
    return out;
}

inline Graph parse_graph6(const std::string& text) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > text.size())
            throw Graph6ParseError("truncated graph6 input", text.size());
    };
    auto sixbits = [&]() {
        need(1);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw Graph6ParseError("byte out of graph6 range", pos);
        ++pos;
        return static_cast<int>(c - 63);
    };
    need(1);
    long n;
    if (text[pos] == '~') {
        ++pos;
        long a = sixbits(), b = sixbits(), c = sixbits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits();
    }
    if (n > Graph::max_n)
        throw Graph6ParseError("graph order " + std::to_string(n) + " exceeds capacity", 0);
    Graph g(static_cast<int>(n));
    int bits = 0, val = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                val = sixbits();
                bits = 6;
            }
            if (val & (1 << (bits - 1))) g.add_edge(u, v);
            --bits;
        }
    }
    if (pos != text.size()) throw Graph6ParseError("trailing bytes after graph6 data", pos);
    return g;
}

}  // namespace dstar
