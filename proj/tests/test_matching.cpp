#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bicrit/matching.hpp"
#include "oracles.hpp"

using namespace bicrit;
using namespace testgraphs;

namespace {

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> hit(g.order(), 0);
    for (const Edge& e : m) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (hit[e.u] || hit[e.v]) return false;
        hit[e.u] = hit[e.v] = 1;
    }
    return true;
}

}  // namespace

TEST_CASE("maximum_matching on named graphs") {
    MatchingEngine eng;
    CHECK(eng.maximum_matching(cycle(5)).size() == 2);

    auto k4 = eng.maximum_matching(complete(4));
    CHECK(k4.size() == 2);
    CHECK(is_valid_matching(complete(4), k4));

    auto pet = eng.maximum_matching(petersen());
    CHECK(pet.size() == 5);
    CHECK(is_valid_matching(petersen(), pet));
    CHECK(oracles::max_matching_size(petersen()) == 5);
}

TEST_CASE("maximum_matching is deterministic") {
    MatchingEngine eng;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(rng, 9);
        auto a = eng.maximum_matching(g);
        auto b = eng.maximum_matching(g);
        CHECK(a == b);
    }
}

TEST_CASE("has_perfect_matching") {
    MatchingEngine eng;
    CHECK(eng.has_perfect_matching(Graph::from_edge_list(2, {{0, 1}})));
    CHECK_FALSE(eng.has_perfect_matching(cycle(5)));

    // explicit perfect matching of the cube: antipodal-in-one-bit pairs
    Graph q3 = cube_q3();
    Matching hand = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    CHECK(is_valid_matching(q3, hand));
    CHECK(hand.size() * 2 == static_cast<std::size_t>(q3.order()));
    CHECK(eng.has_perfect_matching(q3));
}

TEST_CASE("excluded-vertex perfect matching equals subgraph semantics") {
    MatchingEngine eng;
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracles::random_graph(rng, n);
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        if (a == b) continue;
        VertexSet s = {std::min(a, b), std::max(a, b)};
        CHECK(eng.has_perfect_matching_excluding(g, s) == eng.has_perfect_matching(g.minus_vertices(s)));
    }
}

TEST_CASE("is_matching_covered") {
    MatchingEngine eng;
    CHECK(eng.is_matching_covered(cycle(6)));
    CHECK(eng.is_matching_covered(complete(4)));
    CHECK_FALSE(eng.is_matching_covered(complete(4).minus_edge({2, 3})));
    CHECK(eng.is_matching_covered(complete_bipartite(3, 3)));
    CHECK_FALSE(eng.is_matching_covered(cycle(5)));        // odd order
    CHECK_FALSE(eng.is_matching_covered(path(4)));         // middle edge in no pm... end edges only
    CHECK_FALSE(eng.is_matching_covered(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));  // disconnected
    CHECK(eng.is_matching_covered(Graph::from_edge_list(2, {{0, 1}})));
}

TEST_CASE("removable_edges") {
    MatchingEngine eng;
    CHECK(eng.removable_edges(complete(4)).empty());
    CHECK(eng.removable_edges(cycle(6)).empty());
    CHECK(eng.removable_edges(complete_bipartite(3, 3)).size() == 9);
    CHECK_THROWS_AS(eng.removable_edges(cycle(5)), std::invalid_argument);

    // every returned edge individually passes the recheck
    Graph pet = petersen();
    for (const Edge& e : eng.removable_edges(pet)) CHECK(eng.is_matching_covered(pet.minus_edge(e)));
}

TEST_CASE("oracle equivalence on all labeled graphs of order <= 6") {
    MatchingEngine eng;
    for (int n = 0; n <= 6; ++n) {
        long long bad = 0;
        oracles::for_each_labeled_graph(n, [&](const Graph& g) {
            int size = static_cast<int>(eng.maximum_matching(g).size());
            if (size != oracles::max_matching_size(g)) ++bad;
            if (size != oracles::tutte_berge_size(g)) ++bad;
        });
        CHECK(bad == 0);
    }
}

TEST_CASE("singleton sets are barriers of graphs with perfect matchings") {
    MatchingEngine eng;
    std::mt19937_64 rng(29);
    int found = 0;
    while (found < 60) {
        int n = 2 * (1 + static_cast<int>(rng() % 4));
        Graph g = oracles::random_graph(rng, n, 2, 3);
        if (!eng.has_perfect_matching(g)) continue;
        ++found;
        for (int v = 0; v < n; ++v) CHECK(odd_component_count(g, {v}) == 1);
    }
}
