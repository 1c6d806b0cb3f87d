#include <catch2/catch_amalgamated.hpp>

#include "bicrit/criticality.hpp"
#include "oracles.hpp"

using namespace bicrit;
using namespace testgraphs;

TEST_CASE("is_k_factor_critical") {
    CHECK(is_k_factor_critical(complete(4), 2));
    CHECK_FALSE(is_k_factor_critical(cycle(4), 2));
    CHECK_FALSE(is_k_factor_critical(cycle(4), 1));  // parity
    CHECK(is_k_factor_critical(cycle(5), 1));
    CHECK(is_k_factor_critical(complete(5), 1));
    CHECK_THROWS_AS(is_k_factor_critical(complete(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(is_k_factor_critical(complete(4), 4), std::invalid_argument);
}

TEST_CASE("is_bicritical") {
    CHECK(is_bicritical(complete(4)));
    CHECK_FALSE(is_bicritical(complete_bipartite(3, 3)));
    CHECK(is_bicritical(octahedron()));
    CHECK(is_bicritical(double_k4()));
    CHECK(is_bicritical(triple_k4()));
    CHECK(is_bicritical(petersen()));
    CHECK_FALSE(is_bicritical(cycle(6)));
    CHECK_FALSE(is_bicritical(complete(3)));  // fewer than four vertices
}

TEST_CASE("deletable_edges") {
    CHECK(deletable_edges(complete(4)).empty());
    CHECK_FALSE(deletable_edges(octahedron()).empty());
    CHECK(deletable_edges(double_k4()).empty());
    CHECK_THROWS_AS(deletable_edges(cycle(6)), std::invalid_argument);

    // octahedron spot check: removing one edge keeps all 15 vertex pairs good
    Graph oct_less = octahedron().minus_edge({0, 2});
    CHECK(is_bicritical(oct_less));
}

TEST_CASE("is_minimal_k_factor_critical") {
    CHECK(is_minimal_k_factor_critical(complete(4), 2));
    CHECK_FALSE(is_minimal_k_factor_critical(octahedron(), 2));
    CHECK(is_minimal_k_factor_critical(triple_k4(), 2));
    CHECK(is_minimal_k_factor_critical(double_k4(), 2));
    CHECK(is_minimal_k_factor_critical(cycle(5), 1));

    // the two routes agree: minimal(2) == bicritical && DE empty
    MatchingEngine eng;
    for (const Graph& g : {complete(4), octahedron(), double_k4(), triple_k4(), petersen(), cube_q3(), cycle(6)}) {
        bool route_a = is_minimal_k_factor_critical(g, 2, eng);
        bool route_b = is_bicritical(g, eng) && deletable_edges(g, eng).empty();
        CHECK(route_a == route_b);
    }
}

TEST_CASE("is_barrier") {
    CHECK(is_barrier(complete(4), {0}));
    CHECK(is_barrier(cycle(4), {0, 2}));
    CHECK_FALSE(is_barrier(double_k4(), {0, 1}));
    CHECK(is_barrier(cycle(6), {}));  // empty set: c_o = 0 = |S|
    CHECK_THROWS_AS(is_barrier(cycle(5), {0}), std::invalid_argument);
}

TEST_CASE("two_separations") {
    CHECK(two_separations(cycle(4)).empty());  // both 2-cuts are barriers
    CHECK(two_separations(complete(4)).empty());
    auto d4 = two_separations(double_k4());
    REQUIRE(d4.size() == 1);
    CHECK(d4[0] == VertexSet{0, 1});
    CHECK_THROWS_AS(two_separations(cycle(5)), std::invalid_argument);
}

TEST_CASE("classify_brick") {
    CHECK(classify_brick(complete(4)) == BrickKind::minimal_brick);
    CHECK(classify_brick(petersen()) == BrickKind::minimal_brick);
    CHECK(classify_brick(double_k4()) == BrickKind::bicritical_not_brick);
    CHECK(classify_brick(cycle(6)) == BrickKind::not_bicritical);
    CHECK(classify_brick(octahedron()) == BrickKind::brick_not_minimal);
}

TEST_CASE("bicritical structure facts on all labeled graphs of order <= 6") {
    MatchingEngine eng;
    for (int n = 4; n <= 6; n += 2) {
        oracles::for_each_labeled_graph(n, [&](const Graph& g) {
            if (!is_bicritical(g, eng)) return;
            CHECK(g.min_degree() >= 3);
            CHECK(is_connected(g));
            for (const auto& cut : vertex_cuts(g, 2)) {
                // every 2-cut of a bicritical graph is a 2-separation...
                CHECK(odd_component_count(g, cut) != 2);
                // ...all its components are even...
                for (const auto& comp : components_excluding(g, cut))
                    CHECK(comp.size() % 2 == 0);
                // ...and both cut vertices have >= 2 neighbors in each component
                for (const auto& comp : components_excluding(g, cut))
                    for (int x : cut) {
                        int nb = 0;
                        for (int y : comp)
                            if (g.has_edge(x, y)) ++nb;
                        CHECK(nb >= 2);
                    }
                // adjacent separation endpoints: g - uv bicritical, uv removable
                if (g.has_edge(cut[0], cut[1])) {
                    Graph h = g.minus_edge({cut[0], cut[1]});
                    CHECK(is_bicritical(h, eng));
                    CHECK(eng.is_matching_covered(h));
                }
            }
            if (is_minimal_k_factor_critical(g, 2, eng))
                for (const auto& sep : two_separations(g, eng))
                    CHECK_FALSE(g.has_edge(sep[0], sep[1]));  // independent set
        });
    }
}
