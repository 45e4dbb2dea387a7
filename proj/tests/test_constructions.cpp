#include <catch2/catch_amalgamated.hpp>

#include "dstar/bounds.hpp"
#include "dstar/constructions.hpp"

using dstar::Count;
using dstar::Graph;

TEST_CASE("complete bipartite and balanced bipartite builders") {
    auto g = dstar::complete_bipartite(3, 4);
    REQUIRE(g.order() == 7);
    REQUIRE(g.edge_count() == 12);
    REQUIRE(g.is_triangle_free());
    REQUIRE(dstar::turan_bipartite(7) == g);
    REQUIRE(dstar::turan_bipartite(2).edge_count() == 1);
    REQUIRE(dstar::turan_bipartite(9).edge_count() == 20);
    for (int n = 2; n <= 40; ++n) {
        auto t = dstar::turan_bipartite(n);
        REQUIRE(Count(t.edge_count()) == dstar::max_edges_triangle_free(n, n / 2));
        REQUIRE(t.is_triangle_free());
    }
    REQUIRE_THROWS_AS(dstar::complete_bipartite(-1, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(dstar::complete_bipartite(200, 100), std::invalid_argument);
}

TEST_CASE("clique-plus-attachment extremal graph") {
    auto g = dstar::adjacent_extremal(10, 1);
    REQUIRE(g.edge_count() == 17);
    REQUIRE(g.count_triangles() == 8);
    REQUIRE(g.degree_multiset() == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 9, 9});
    REQUIRE(g.is_connected());
    REQUIRE(dstar::satisfies_adjacent_condition(g, 1));

    REQUIRE(dstar::adjacent_extremal(6, 2).count_triangles() == 10);

    for (int k = 1; k <= 3; ++k)
        for (int n = k + 2; n <= 30; ++n) {
            auto h = dstar::adjacent_extremal(n, k);
            REQUIRE(dstar::satisfies_adjacent_condition(h, k));
            REQUIRE(h.is_connected());
            REQUIRE(h.count_triangles() == dstar::adjacent_min_triangles(n, k));
            if (n >= 2 * k + 2)
                REQUIRE(Count(h.edge_count()) == dstar::adjacent_min_edges(n, k));
        }

    REQUIRE_THROWS_AS(dstar::adjacent_extremal(3, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(dstar::adjacent_extremal(10, 0), std::invalid_argument);
}

TEST_CASE("edge-minimal graphs for the non-adjacent condition, all residues") {
    auto g7 = dstar::nonadjacent_edge_extremal(7);
    REQUIRE(g7.edge_count() == 14);
    REQUIRE(g7.degree_multiset() == std::vector<int>(7, 4));

    REQUIRE(dstar::nonadjacent_edge_extremal(8).edge_count() == 19);
    REQUIRE(dstar::nonadjacent_edge_extremal(4).edge_count() == 6);  // K4
    REQUIRE(dstar::nonadjacent_edge_extremal(4).count_triangles() == 4);

    for (int n = 3; n <= 30; ++n) {
        auto g = dstar::nonadjacent_edge_extremal(n);
        REQUIRE(dstar::satisfies_nonadjacent_condition(g, 1));
        REQUIRE(Count(g.edge_count()) == dstar::nonadjacent_min_edges(n));
        if (n % 2 == 1)
            REQUIRE(g.count_triangles() == dstar::nonadjacent_min_triangles_odd(n));
    }

    REQUIRE_THROWS_AS(dstar::nonadjacent_edge_extremal(2), std::invalid_argument);
}

TEST_CASE("even-order triangle-light construction") {
    auto g8 = dstar::even_triangle_light(8);
    REQUIRE(g8.degree_multiset() == std::vector<int>(8, 5));
    REQUIRE(g8.count_triangles() == 16);  // n^2/4

    auto g10 = dstar::even_triangle_light(10);
    REQUIRE(g10.degree_multiset() == std::vector<int>(10, 6));
    REQUIRE(g10.count_triangles() == 24);  // n^2/4 - 1

    for (int n = 4; n <= 30; n += 2) {
        auto g = dstar::even_triangle_light(n);
        REQUIRE(dstar::satisfies_nonadjacent_condition(g, 1));
        REQUIRE(g.degree_multiset() == std::vector<int>(n, n / 2 + 1));
        Count want = n % 4 == 0 ? Count(n) * n / 4 : Count(n) * n / 4 - 1;
        REQUIRE(g.count_triangles() == want);
    }

    REQUIRE_THROWS_AS(dstar::even_triangle_light(7), std::invalid_argument);
    REQUIRE_THROWS_AS(dstar::even_triangle_light(2), std::invalid_argument);
}

TEST_CASE("condition predicates") {
    auto k4 = dstar::nonadjacent_edge_extremal(4);
    REQUIRE(dstar::satisfies_adjacent_condition(k4, 2));     // 3+3 >= 4+2
    REQUIRE_FALSE(dstar::satisfies_adjacent_condition(k4, 3));
    REQUIRE(dstar::satisfies_nonadjacent_condition(k4, 50)); // vacuous, no non-edges

    auto p3 = dstar::graph_from_edges(3, {{0, 1}, {1, 2}});
    REQUIRE(dstar::satisfies_nonadjacent_condition(p3, -1)); // d(0)+d(2)=2 >= 3-1
    REQUIRE_FALSE(dstar::satisfies_nonadjacent_condition(p3, 0));
    Graph empty(3);
    REQUIRE(dstar::satisfies_adjacent_condition(empty, 5));  // vacuous, no edges
}
