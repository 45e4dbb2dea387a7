#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dstar/bounds.hpp"
#include "dstar/constructions.hpp"

using dstar::Count;
using dstar::DoubleStar;
using dstar::Rational;

TEST_CASE("triangle-free edge maximum under a degree cap") {
    REQUIRE(dstar::max_edges_triangle_free(7, 3) == 12);
    REQUIRE(dstar::max_edges_triangle_free(10, 5) == 25);
    REQUIRE(dstar::max_edges_triangle_free(5, 0) == 0);
    REQUIRE_THROWS_AS(dstar::max_edges_triangle_free(5, 5), std::invalid_argument);
}

TEST_CASE("adjacent-condition closed forms") {
    REQUIRE(dstar::adjacent_min_triangles(40, 1) == 38);
    REQUIRE(dstar::adjacent_min_triangles(40, 2) == 112);
    // at n = k+2 the graph is K_{k+2}, so the formula collapses to C(k+2,3)
    for (int k = 1; k <= 10; ++k)
        REQUIRE(dstar::adjacent_min_triangles(k + 2, k) == dstar::binom(k + 2, 3));
    REQUIRE_THROWS_AS(dstar::adjacent_min_triangles(3, 2), std::invalid_argument);

    REQUIRE(dstar::adjacent_min_edges(6, 1) == 9);
    REQUIRE(dstar::adjacent_min_edges(8, 2) == 18);
    REQUIRE(dstar::adjacent_min_edges(4, 1) == 5);
    REQUIRE_THROWS_AS(dstar::adjacent_min_edges(5, 2), std::invalid_argument);
}

TEST_CASE("non-adjacent-condition closed forms") {
    long long want[] = {3, 6, 8, 11, 14, 19, 23, 28, 33, 40, 46, 53};
    for (int n = 3; n <= 14; ++n)
        REQUIRE(dstar::nonadjacent_min_edges(n) == want[n - 3]);
    REQUIRE_THROWS_AS(dstar::nonadjacent_min_edges(2), std::invalid_argument);

    REQUIRE(dstar::nonadjacent_min_triangles_odd(3) == 1);
    REQUIRE(dstar::nonadjacent_min_triangles_odd(5) == 4);
    REQUIRE(dstar::nonadjacent_min_triangles_odd(7) == 6);
    REQUIRE(dstar::nonadjacent_min_triangles_odd(9) == 12);
    REQUIRE(dstar::nonadjacent_min_triangles_odd(11) == 15);
    REQUIRE(dstar::nonadjacent_min_triangles_odd(13) == 24);
    REQUIRE_THROWS_AS(dstar::nonadjacent_min_triangles_odd(8), std::invalid_argument);
}

TEST_CASE("triangle supersaturation bound") {
    auto b = dstar::lovasz_simonovits_bound(7, 14);
    REQUIRE(b.k == 2);
    REQUIRE(b.bound == 6);
    REQUIRE(b.applicable);

    b = dstar::lovasz_simonovits_bound(9, 24);
    REQUIRE(b.k == 4);
    REQUIRE(b.bound == 16);
    REQUIRE(b.applicable);

    b = dstar::lovasz_simonovits_bound(6, 9);
    REQUIRE(b.k == 0);
    REQUIRE(b.bound == 0);

    b = dstar::lovasz_simonovits_bound(7, 16);  // k = 4, past the validity range
    REQUIRE(b.k == 4);
    REQUIRE_FALSE(b.applicable);

    b = dstar::lovasz_simonovits_bound(8, 10);  // below the quarter-square threshold
    REQUIRE(b.k == 0);
    REQUIRE(b.bound == 0);
}

TEST_CASE("residue-free edge lower bound") {
    REQUIRE(dstar::universal_edge_lower_bound(7) == Rational(215, 16));
    REQUIRE(dstar::universal_edge_lower_bound(9) == Rational(351, 16));
    REQUIRE(dstar::universal_edge_lower_bound(3) == Rational(39, 16));
    // never exceeds the exact per-residue minimum
    for (int n = 3; n <= 200; ++n)
        REQUIRE(dstar::universal_edge_lower_bound(n) <= Rational(dstar::nonadjacent_min_edges(n)));
    REQUIRE_THROWS_AS(dstar::universal_edge_lower_bound(2), std::invalid_argument);
}

TEST_CASE("forward differences match the bipartite count exactly") {
    for (long long n = 4; n <= 40; ++n)
        for (long long x = 1; x <= n - 2; ++x) {
            Count d13 = dstar::count_double_stars_bipartite(n, x + 1, {1, 3}) -
                        dstar::count_double_stars_bipartite(n, x, {1, 3});
            REQUIRE(dstar::s13_forward_difference(n, x) == d13);
            Count d14 = dstar::count_double_stars_bipartite(n, x + 1, {1, 4}) -
                        dstar::count_double_stars_bipartite(n, x, {1, 4});
            REQUIRE(dstar::s14_forward_difference(n, x) == d14);
        }
    REQUIRE_THROWS_AS(dstar::s13_forward_difference(10, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(dstar::s14_forward_difference(10, 9), std::invalid_argument);
}

TEST_CASE("S_{1,3} difference is strictly negative past the balanced split for n >= 15") {
    for (long long n = 15; n <= 40; ++n)
        for (long long x = (n + 1) / 2; x <= n - 2; ++x)
            REQUIRE(dstar::s13_forward_difference(n, x) < 0);
    // n = 13 is genuinely outside the range: the difference vanishes at x = 7
    REQUIRE(dstar::s13_forward_difference(13, 7) == 0);
    // odd n: zero at the exactly balanced split
    for (long long n = 5; n <= 39; n += 2)
        REQUIRE(dstar::s13_forward_difference(n, (n - 1) / 2) == 0);
}

TEST_CASE("S_{1,4} difference changes sign exactly at the quadratic root") {
    // On x >= ceil(n/2), with n >= 7, the difference is positive below the
    // root (3n-3+sqrt(n^2+18n-79))/6 and negative above it. Exact integer
    // comparison: x < root iff (6x-3n+3)^2 < n^2+18n-79 on this range.
    for (long long n = 7; n <= 40; ++n) {
        long long disc = n * n + 18 * n - 79;
        for (long long x = (n + 1) / 2; x <= n - 2; ++x) {
            long long lhs = (6 * x - 3 * n + 3) * (6 * x - 3 * n + 3);
            Count d = dstar::s14_forward_difference(n, x);
            if (lhs < disc) REQUIRE(d > 0);
            else if (lhs == disc) REQUIRE(d == 0);
            else REQUIRE(d < 0);
        }
    }
    // integer-root cases really occur
    REQUIRE(dstar::s14_forward_difference(13, 9) == 0);
    REQUIRE(dstar::s14_forward_difference(32, 22) == 0);
    // n = 6 kills the whole difference through the n-6 factor
    for (long long x = 1; x <= 4; ++x) REQUIRE(dstar::s14_forward_difference(6, x) == 0);
}

TEST_CASE("S_{1,4} root value and asymptotics") {
    REQUIRE(dstar::s14_root(100) == Catch::Approx((297.0 + std::sqrt(11721.0)) / 6).epsilon(1e-12));
    REQUIRE(dstar::s14_root(32) == Catch::Approx(22.0).margin(1e-9));
    REQUIRE(dstar::s14_root(13) == Catch::Approx(9.0).margin(1e-9));
    REQUIRE(dstar::s14_root(4) == Catch::Approx(2.0).margin(1e-9));
    REQUIRE_THROWS_AS(dstar::s14_root(3), std::invalid_argument);
    double r = dstar::s14_root(1000000) / 1000000.0;
    REQUIRE(std::abs(r - 2.0 / 3.0) < 1e-5);
}

TEST_CASE("integer optimal split") {
    auto s = dstar::optimal_split_integer(13, {1, 3});
    REQUIRE(s.x == 7);
    REQUIRE(s.value == 6720);
    REQUIRE(s.tied == std::vector<long long>{7, 8});

    s = dstar::optimal_split_integer(14, {1, 3});
    REQUIRE(s.x == 7);
    REQUIRE(s.value == 11760);
    REQUIRE(s.tied == std::vector<long long>{7, 8});

    // symmetric stars favor the balanced split
    for (int a = 1; a <= 3; ++a)
        for (long long n = 2 * a + 2; n <= 30; ++n) {
            auto t = dstar::optimal_split_integer(n, {a, a});
            REQUIRE(t.x == (n + 1) / 2);
        }

    s = dstar::optimal_split_integer(2, {1, 1});
    REQUIRE(s.x == 1);
    REQUIRE(s.value == 0);

    // S_{1,4} optimum drifts to the 2/3 split
    auto big = dstar::optimal_split_integer(3000, {1, 4});
    REQUIRE(std::abs(static_cast<double>(big.x) / 3000.0 - 2.0 / 3.0) < 0.01);
    REQUIRE_THROWS_AS(dstar::optimal_split_integer(1, {1, 1}), std::invalid_argument);
}

TEST_CASE("integer optimal split agrees with a brute-force scan, n <= 12") {
    // rerun the scan with the subgraph oracle on explicit graphs in place of
    // the closed form; argmax, value, and tie set must not change
    for (long long n = 2; n <= 12; ++n)
        for (DoubleStar ds : {DoubleStar{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
            auto fast = dstar::optimal_split_integer(n, ds);
            dstar::OptimalSplit slow{0, dstar::Count(-1), {}};
            for (long long x = (n + 1) / 2; x <= n - 1; ++x) {
                auto g = dstar::complete_bipartite(static_cast<int>(x), static_cast<int>(n - x));
                dstar::Count v = dstar::count_double_stars_oracle(g, ds);
                if (v > slow.value) slow = {x, v, {x}};
                else if (v == slow.value) slow.tied.push_back(x);
            }
            REQUIRE(fast.x == slow.x);
            REQUIRE(fast.value == slow.value);
            REQUIRE(fast.tied == slow.tied);
        }
}

TEST_CASE("continuous optimal split hits the closed forms") {
    REQUIRE(std::abs(dstar::optimal_split_continuous({1, 4}) - (3.0 + std::sqrt(3.0)) / 6.0) < 1e-6);
    REQUIRE(std::abs(dstar::optimal_split_continuous({2, 5}) - 2.0 / 3.0) < 1e-6);
    REQUIRE(std::abs(dstar::optimal_split_continuous({3, 8}) - (5.0 + std::sqrt(5.0)) / 10.0) < 1e-6);
    REQUIRE(dstar::optimal_split_continuous({1, 1}) == 0.5);
    REQUIRE(dstar::optimal_split_continuous({4, 7}) == 0.5);
    REQUIRE(dstar::optimal_split_continuous({2, 2}) == 0.5);
    REQUIRE_THROWS_AS(dstar::optimal_split_continuous({1, 1}, -1.0), std::invalid_argument);
}

TEST_CASE("optimal split table") {
    // frozen 3-decimal values, diagonal-up grid 1 <= a <= 6, a <= b <= 9
    const double frozen[6][9] = {
        {0.500, 0.500, 0.500, 0.789, 0.832, 0.857, 0.875, 0.889, 0.900},
        {-1, 0.500, 0.500, 0.500, 0.667, 0.743, 0.777, 0.800, 0.818},
        {-1, -1, 0.500, 0.500, 0.500, 0.500, 0.682, 0.724, 0.749},
        {-1, -1, -1, 0.500, 0.500, 0.500, 0.500, 0.633, 0.684},
        {-1, -1, -1, -1, 0.500, 0.500, 0.500, 0.500, 0.585},
        {-1, -1, -1, -1, -1, 0.500, 0.500, 0.500, 0.500}};
    auto t = dstar::table_xmax(6, 9);
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b < a; ++b) REQUIRE(std::isnan(t[a][b]));
        double prev = 0.0;
        for (int b = a; b <= 9; ++b) {
            double rounded = std::round(t[a][b] * 1000.0) / 1000.0;
            REQUIRE(rounded == Catch::Approx(frozen[a - 1][b - 1]).margin(1e-9));
            REQUIRE(t[a][b] >= prev);  // nondecreasing along each row
            prev = t[a][b];
        }
        REQUIRE(t[a][a] == 0.5);
    }
    REQUIRE_THROWS_AS(dstar::table_xmax(0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(dstar::table_xmax(3, 2), std::invalid_argument);

    // soft check, reported only: for b >= 5a the maximizer tracks b/(a+b)
    double worst = 0.0;
    for (int a = 1; a <= 6; ++a)
        for (int b = std::max(a, 5 * a); b <= 9; ++b)
            worst = std::max(worst, std::abs(t[a][b] - double(b) / (a + b)));
    WARN("b/(a+b) heuristic, worst deviation over cells with b >= 5a: " << worst
         << (worst < 0.05 ? " (inside 0.05)" : " (outside 0.05)"));
}
