#include <doctest.h>

#include <bit>

#include "kvc/two_sat.hpp"
#include "test_support.hpp"

using namespace kvc;
using namespace kvc::test;

TEST_CASE("to_max2sat_cc translates edges to monotone clauses") {
    auto inst = to_max2sat_cc(g1(), 2);
    CHECK(inst.num_vars == 3);
    CHECK(inst.cardinality == 2);
    REQUIRE(inst.clauses.size() == 3);
    CHECK(inst.clauses[0] == Max2SatClause{0, 1, 2.0});
    CHECK(inst.clauses[1] == Max2SatClause{1, 2, 1.0});
    CHECK(inst.clauses[2] == Max2SatClause{2, Max2SatClause::kUnit, 0.5});

    auto empty = to_max2sat_cc(WeightedGraph(4), 2);
    CHECK(empty.clauses.empty());

    // Zero-weight edges produce no clause.
    auto zero = to_max2sat_cc(WeightedGraph(2, {{0, 1, 0.0}}), 1);
    CHECK(zero.clauses.empty());
}

TEST_CASE("satisfied weight equals covered weight for every assignment") {
    for (uint64_t seed = 900; seed < 915; ++seed) {
        auto g = random_graph(seed, 2 + static_cast<int>(seed % 8), 0.5);
        int n = g.num_vertices();
        auto inst = to_max2sat_cc(g, n / 2);
        for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
            std::vector<bool> assignment(n);
            for (int v = 0; v < n; ++v) assignment[v] = mask >> v & 1;
            CHECK(rel_close(satisfied_weight(inst, assignment),
                            covered_weight(g, set_of_mask(mask, n))));
        }
    }
}

TEST_CASE("wcnf-cc serialization round-trips") {
    auto inst = to_max2sat_cc(g1(), 2);
    std::string text = write_wcnf_cc(inst);
    CHECK(text == "p wcnf-cc 3 3 2\n2 1 2 0\n1 2 3 0\n0.5 3 0\n");
    auto parsed = parse_wcnf_cc(text);
    CHECK(parsed.num_vars == inst.num_vars);
    CHECK(parsed.cardinality == inst.cardinality);
    CHECK(parsed.clauses == inst.clauses);

    for (uint64_t seed = 950; seed < 960; ++seed) {
        auto g = random_graph(seed, 7, 0.5);
        auto original = to_max2sat_cc(g, 3);
        auto round = parse_wcnf_cc(write_wcnf_cc(original));
        CHECK(round.clauses == original.clauses);
    }
}

TEST_CASE("wcnf-cc parse errors") {
    CHECK_THROWS_AS(parse_wcnf_cc(""), ParseError);
    CHECK_THROWS_AS(parse_wcnf_cc("p wcnf-cc 2 1 1\n"), ParseError);           // missing clause
    CHECK_THROWS_AS(parse_wcnf_cc("p wcnf-cc 2 0 1\n1 1 0\n"), ParseError);    // extra clause
    CHECK_THROWS_AS(parse_wcnf_cc("p wcnf-cc 2 1 1\n1 3 0\n"), ParseError);    // bad literal
    CHECK_THROWS_AS(parse_wcnf_cc("p wcnf-cc 2 1 1\n1 1 2\n"), ParseError);    // no terminator
}

TEST_CASE("local search obeys the cardinality constraint and finds small optima") {
    for (uint64_t seed = 1000; seed < 1010; ++seed) {
        auto g = random_graph(seed, 8, 0.5);
        for (int k : {0, 1, 3, 8}) {
            auto inst = to_max2sat_cc(g, k);
            LocalSearchParams params;
            params.seed = seed;
            auto assignment = local_search_max2sat_cc(inst, params);
            REQUIRE(static_cast<int>(assignment.size()) == 8);
            int true_count = 0;
            for (bool b : assignment) true_count += b;
            CHECK(true_count == k);
        }
    }

    // On tiny instances the search should reach the optimum.
    for (uint64_t seed = 1020; seed < 1030; ++seed) {
        auto g = random_graph(seed, 6, 0.6);
        int k = 2;
        auto inst = to_max2sat_cc(g, k);
        auto assignment = local_search_max2sat_cc(inst, {});
        double value = satisfied_weight(inst, assignment);
        double best = 0.0;
        for (uint64_t mask = 0; mask < (1ull << 6); ++mask) {
            if (std::popcount(mask) != k) continue;
            best = std::max(best, coverage_by_mask(g, mask));
        }
        CHECK(rel_close(value, best));
    }
}

TEST_CASE("local search is deterministic for a fixed seed") {
    auto inst = to_max2sat_cc(random_graph(3, 10, 0.5), 4);
    LocalSearchParams params;
    params.seed = 77;
    auto a = local_search_max2sat_cc(inst, params);
    auto b = local_search_max2sat_cc(inst, params);
    CHECK(a == b);
}
