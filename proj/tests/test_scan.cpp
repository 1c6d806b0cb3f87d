#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "bicrit/scan.hpp"
#include "oracles.hpp"

using namespace bicrit;
using namespace testgraphs;

TEST_CASE("enumeration counts match the connected-graph census") {
    const long long expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        long long count = 0;
        for_each_connected(n, [&](const Graph& g) {
            CHECK(g.order() == n);
            ++count;
        });
        CHECK(count == expected[n]);
    }
}

TEST_CASE("enumeration emits no two isomorphic graphs and all are connected") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> codes;
        long long count = 0;
        for_each_connected(n, [&](const Graph& g) {
            ++count;
            CHECK(is_connected(g));
            codes.insert(canonical_form(g));
        });
        CHECK(static_cast<long long>(codes.size()) == count);
    }
}

TEST_CASE("enumeration agrees with brute-force dedup oracle for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> oracle;
        oracles::for_each_labeled_graph(n, [&](const Graph& g) {
            if (is_connected(g)) oracle.insert(canonical_form(g));
        });
        std::set<std::string> mine;
        for_each_connected(n, [&](const Graph& g) { mine.insert(canonical_form(g)); });
        CHECK(mine == oracle);
    }
}

TEST_CASE("graph6 round-trip is the identity over the enumerated census") {
    for (int n = 1; n <= 7; ++n)
        for_each_connected(n, [&](const Graph& g) { CHECK(parse_graph6(emit_graph6(g)) == g); });
}

TEST_CASE("enumeration order limits") {
    CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_connected(kEnumerationOrderLimit + 1), std::invalid_argument);
}

TEST_CASE("census over orders 4..6") {
    auto report = census(4, 6, default_check_names());

    const OrderStats& s4 = report.per_order.at(4);
    CHECK(s4.connected == 6);
    CHECK(s4.bicritical == 1);
    CHECK(s4.minimal_bicritical == 1);
    CHECK(s4.bricks == 1);
    CHECK(s4.minimal_bricks == 1);
    CHECK(s4.min_cubic == 4);
    REQUIRE(s4.sharpness.size() == 1);
    CHECK(s4.sharpness[0] == canonical_form(complete(4)));

    const OrderStats& s5 = report.per_order.at(5);
    CHECK(s5.connected == 21);
    CHECK(s5.bicritical == 0);
    CHECK(s5.min_cubic == -1);

    const OrderStats& s6 = report.per_order.at(6);
    CHECK(s6.connected == 112);
    CHECK(s6.min_cubic == 4);
    // D4 is a minimal bicritical sharpness witness at order 6
    std::string d4 = canonical_form(double_k4());
    CHECK(std::count(s6.sharpness.begin(), s6.sharpness.end(), d4) == 1);
    CHECK(s6.minimal_bicritical >= 1);
    CHECK(s6.bicritical >= s6.minimal_bicritical);

    CHECK(report.total_failures() == 0);
}

TEST_CASE("census is byte-identical across worker counts") {
    std::string base;
    for (int workers : {1, 2, 8}) {
        ScanOptions opt;
        opt.workers = workers;
        std::string rendered = census(4, 6, default_check_names(), opt).render();
        if (base.empty())
            base = rendered;
        else
            CHECK(rendered == base);
    }
    CHECK(base.find("[order 4]") != std::string::npos);
}

TEST_CASE("census witnesses re-parse and re-pass their property") {
    auto report = census(4, 6, {"main_theorem"});
    MatchingEngine eng;
    for (const auto& [n, s] : report.per_order) {
        for (const auto& code : s.sharpness) {
            Graph g = parse_graph6(code);
            CHECK(g.order() == n);
            CHECK(is_minimal_k_factor_critical(g, 2, eng));
            CHECK(cubic_vertices(g).size() == 4);
        }
    }
    for (const auto& code : report.witness_codes()) CHECK_NOTHROW(parse_graph6(code));
}

TEST_CASE("census over an external graph6 stream") {
    std::string lines = emit_graph6(complete(4)) + "\n" + emit_graph6(double_k4()) + "\n" +
                        emit_graph6(cycle(6)) + "\n";
    std::istringstream in(lines);
    auto report = census_stream(in, {"main_theorem", "separation_properties"});
    CHECK(report.per_order.at(4).connected == 1);
    CHECK(report.per_order.at(6).connected == 2);
    CHECK(report.per_order.at(4).minimal_bicritical == 1);
    CHECK(report.per_order.at(6).minimal_bicritical == 1);
    CHECK(report.total_failures() == 0);

    std::istringstream bad("C~\nnot-a-graph\n");
    CHECK_THROWS_AS(census_stream(bad, {"main_theorem"}), std::invalid_argument);
}

TEST_CASE("hunt finds the probe counterexample at order 6") {
    auto hit = hunt_counterexample("probe_bicritical_is_brick", 6);
    REQUIRE(hit.has_value());
    CHECK(hit->order == 6);
    CHECK(hit->report.verdict == Verdict::fail);
    CHECK(recheck_witness(hit->report));

    // the witness is a bicritical non-brick on 6 vertices
    Graph g = parse_graph6(hit->code);
    MatchingEngine eng;
    CHECK(is_bicritical(g, eng));
    CHECK_FALSE(is_k_connected(g, 3));
}

TEST_CASE("hunt returns nothing for true statements") {
    CHECK_FALSE(hunt_counterexample("probe_true", 6).has_value());
    CHECK_FALSE(hunt_counterexample("main_theorem", 6).has_value());
    CHECK_THROWS_AS(hunt_counterexample("no_such_check", 6), std::invalid_argument);
}

TEST_CASE("hunt is deterministic across worker counts") {
    ScanOptions one, eight;
    one.workers = 1;
    eight.workers = 8;
    auto a = hunt_counterexample("probe_bicritical_is_brick", 6, one);
    auto b = hunt_counterexample("probe_bicritical_is_brick", 6, eight);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->code == b->code);
    CHECK(a->order == b->order);
}
