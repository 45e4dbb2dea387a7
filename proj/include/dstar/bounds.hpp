#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dstar/counting.hpp"

namespace dstar {

using Rational = boost::multiprecision::cpp_rational;

inline Count max_edges_triangle_free(long long n, long long delta) {
    if (delta < 0 || delta > n - 1)
        throw std::invalid_argument("max_edges_triangle_free: need 0 <= delta <= n-1");
    return Count(delta) * Count(n - delta);
}

inline Count adjacent_min_triangles(long long n, long long k) {
    if (k < 1 || n < k + 2)
        throw std::invalid_argument("adjacent_min_triangles: need k >= 1, n >= k+2");
    return binom(k + 1, 2) * (n - k - 1) + binom(k + 1, 3);
}

inline Count adjacent_min_edges(long long n, long long k) {
    if (k < 1 || n < 2 * k + 2)
        throw std::invalid_argument("adjacent_min_edges: need k >= 1, n >= 2k+2");
    return Count(k + 1) * n - binom(k + 2, 2);
}

// Piecewise by n mod 4: 4k^2-k, 4k^2+k+1, 4k^2+3k+1, 4k^2+5k+2
// for n = 4k-1, 4k, 4k+1, 4k+2.
inline Count nonadjacent_min_edges(long long n) {
    if (n < 3) throw std::invalid_argument("nonadjacent_min_edges: need n >= 3");
    long long k;
    switch (n % 4) {
    case 3: k = (n + 1) / 4; return Count(4 * k * k - k);
    case 0: k = n / 4;       return Count(4 * k * k + k + 1);
    case 1: k = (n - 1) / 4; return Count(4 * k * k + 3 * k + 1);
    default: k = (n - 2) / 4; return Count(4 * k * k + 5 * k + 2);
    }
}

inline Count nonadjacent_min_triangles_odd(long long n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("nonadjacent_min_triangles_odd: need odd n >= 3");
    if (n % 4 == 3) {
        long long k = (n + 1) / 4;
        return Count(k * (2 * k - 1));
    }
    long long k = (n - 1) / 4;
    return Count(2 * k * (k + 1));
}

struct LovaszSimonovitsBound {
    Count bound;     // k * floor(n/2), zero when e <= floor(n^2/4)
    long long k;     // e - floor(n^2/4), clamped at 0
    bool applicable; // k < n/2, the fact's validity range
};

inline LovaszSimonovitsBound lovasz_simonovits_bound(long long n, long long e) {
    long long k = e - (n * n) / 4;
    if (k < 0) k = 0;
    bool ok = 2 * k < n;
    return {Count(k) * Count(n / 2), k, ok};
}

// (4n^2 + 4n - 9) / 16, the residue-class-free lower bound on edges under
// the non-adjacent condition.
inline Rational universal_edge_lower_bound(long long n) {
    if (n < 3) throw std::invalid_argument("universal_edge_lower_bound: need n >= 3");
    return Rational(4 * n * n + 4 * n - 9, 16);
}

namespace detail {

// The closed forms carry prefactors x/3 and x/24; the full product is always
// an integer, asserted here rather than trusted.
inline Count exact_from_rational(const Rational& r, const char* who) {
    if (denominator(r) != 1) throw std::logic_error(std::string(who) + ": non-integer value");
    return numerator(r);
}

}  // namespace detail

// f(n,x+1) - f(n,x) for f(n,x) = n(S_{1,3}, K_{x,n-x}), closed form.
inline Count s13_forward_difference(long long n, long long x) {
    if (x < 1 || x > n - 2)
        throw std::invalid_argument("s13_forward_difference: need 1 <= x <= n-2");
    Rational v = Rational(x, 3) * (n - 1 - 2 * x) * (n - 1 - x) *
                 (3 * x * x + (3 - 3 * n) * x + (n * n - 6 * n + 14));
    return detail::exact_from_rational(v, "s13_forward_difference");
}

// Same for S_{1,4}; the n-6 factor makes the whole difference vanish at n=6.
inline Count s14_forward_difference(long long n, long long x) {
    if (x < 1 || x > n - 2)
        throw std::invalid_argument("s14_forward_difference: need 1 <= x <= n-2");
    Rational v = Rational(x, 24) * (n - 6) * (n - 1 - 2 * x) * (n - 1 - x) *
                 (9 * x * x + (9 - 9 * n) * x + (2 * n * n - 9 * n + 22));
    return detail::exact_from_rational(v, "s14_forward_difference");
}

// Larger root of the S_{1,4} difference quadratic: (3n-3 + sqrt(n^2+18n-79)) / 6.
// The difference is positive below this root and negative above it, so the
// root locates the optimal split; root/n tends to 2/3.
inline double s14_root(long long n) {
    double disc = static_cast<double>(n) * n + 18.0 * n - 79.0;
    if (disc < 0) throw std::invalid_argument("s14_root: negative discriminant");
    return (3.0 * n - 3.0 + std::sqrt(disc)) / 6.0;
}

struct OptimalSplit {
    long long x;                  // smallest maximizing split in [ceil(n/2), n-1]
    Count value;
    std::vector<long long> tied;  // every maximizing split in that range
};

// Exhaustive scan over x in [ceil(n/2), n-1]; the count is symmetric under
// x <-> n-x so this canonical half covers all splits.
inline OptimalSplit optimal_split_integer(long long n, DoubleStar ds) {
    if (n < 2) throw std::invalid_argument("optimal_split_integer: need n >= 2");
    OptimalSplit best{0, Count(-1), {}};
    for (long long x = (n + 1) / 2; x <= n - 1; ++x) {
        Count v = count_double_stars_bipartite(n, x, ds);
        if (v > best.value) {
            best = {x, v, {x}};
        } else if (v == best.value) {
            best.tied.push_back(x);
        }
    }
    return best;
}

// Argmax of g(x) = x^a (1-x)^b + x^b (1-x)^a over [1/2, 1]: dense scan plus
// ternary refinement. Ties resolve to the smaller x, so a flat-at-half case
// returns exactly 0.5.
inline double optimal_split_continuous(DoubleStar ds, double tol = 1e-9) {
    if (tol <= 0) throw std::invalid_argument("optimal_split_continuous: tol must be positive");
    const int a = ds.a, b = ds.b;
    auto g = [a, b](double x) {
        return std::pow(x, a) * std::pow(1 - x, b) + std::pow(x, b) * std::pow(1 - x, a);
    };
    const int grid = 100000;
    const double step = 0.5 / grid;
    double best_x = 0.5, best_v = g(0.5);
    for (int i = 1; i <= grid; ++i) {
        double x = 0.5 + step * i;
        double v = g(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    if (best_x == 0.5) return 0.5;
    double lo = std::max(0.5, best_x - step), hi = std::min(1.0, best_x + step);
    while (hi - lo > tol) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (g(m1) < g(m2)) lo = m1;
        else hi = m2;
    }
    double x = 0.5 * (lo + hi);
    return g(0.5) >= g(x) ? 0.5 : x;
}

// x_max over the grid 1 <= a <= a_max, a <= b <= b_max; cells with b < a are
// left NaN (undefined half of the table).
inline std::vector<std::vector<double>> table_xmax(int a_max, int b_max, double tol = 1e-9) {
    if (a_max < 1 || b_max < a_max) throw std::invalid_argument("table_xmax: bad grid bounds");
    std::vector<std::vector<double>> t(a_max + 1, std::vector<double>(b_max + 1,
                                       std::numeric_limits<double>::quiet_NaN()));
    for (int a = 1; a <= a_max; ++a)
        for (int b = a; b <= b_max; ++b) t[a][b] = optimal_split_continuous(DoubleStar(a, b), tol);
    return t;
}

}  // namespace dstar
