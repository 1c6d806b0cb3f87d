#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "bicrit/canonical.hpp"
#include "oracles.hpp"

using namespace bicrit;
using namespace testgraphs;

TEST_CASE("canonical_form is invariant under relabeling") {
    std::mt19937_64 rng(31);
    Graph pet = petersen();
    std::string base = canonical_form(pet);
    for (int trial = 0; trial < 20; ++trial) {
        auto perm = oracles::random_permutation(rng, 10);
        CHECK(canonical_form(apply_labeling(pet, perm)) == base);
    }
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = oracles::random_graph(rng, n);
        auto perm = oracles::random_permutation(rng, n);
        CHECK(canonical_form(apply_labeling(g, perm)) == canonical_form(g));
    }
}

TEST_CASE("distinct graphs get distinct codes") {
    CHECK(canonical_form(complete(4)) != canonical_form(cycle(4)));

    // the 11 isomorphism classes of graphs on 4 vertices, by brute-force
    // permutation dedup, each map to a distinct code
    std::vector<Graph> reps;
    oracles::for_each_labeled_graph(4, [&](const Graph& g) {
        for (const Graph& r : reps)
            if (oracles::isomorphic(r, g)) return;
        reps.push_back(g);
    });
    REQUIRE(reps.size() == 11);
    std::set<std::string> codes;
    for (const Graph& r : reps) codes.insert(canonical_form(r));
    CHECK(codes.size() == 11);
}

TEST_CASE("codes separate exactly the isomorphism classes on 5 vertices") {
    std::vector<Graph> all;
    oracles::for_each_labeled_graph(5, [&](const Graph& g) { all.push_back(g); });
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph& a = all[rng() % all.size()];
        const Graph& b = all[rng() % all.size()];
        CHECK((canonical_form(a) == canonical_form(b)) == oracles::isomorphic(a, b));
    }
}

TEST_CASE("canonical code parses back to an isomorphic graph") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(rng, 6);
        Graph canon = parse_graph6(canonical_form(g));
        CHECK(oracles::isomorphic(g, canon));
    }
}

TEST_CASE("order limit") {
    CHECK_NOTHROW(canonical_form(complete(16)));
    CHECK_THROWS_AS(canonical_form(complete(17)), std::invalid_argument);
}

TEST_CASE("analysis exposes orbits and valid generators") {
    auto pet = canonical_analysis(petersen());
    for (int v = 0; v < 10; ++v) CHECK(pet.orbit[v] == 0);  // vertex-transitive
    for (const auto& gen : pet.generators) {
        Graph image = apply_labeling(petersen(), gen);
        CHECK(image == petersen());
    }

    auto star = canonical_analysis(complete_bipartite(1, 3));
    CHECK(star.orbit[0] == 0);
    CHECK(star.orbit[1] == 1);
    CHECK(star.orbit[2] == 1);
    CHECK(star.orbit[3] == 1);

    // labeling is a permutation achieving the canonical code
    Graph d4 = double_k4();
    auto a = canonical_analysis(d4);
    CHECK(emit_graph6(apply_labeling(d4, a.labeling)) == a.code);
}
