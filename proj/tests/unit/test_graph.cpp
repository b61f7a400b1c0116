#include <doctest.h>

#include "kvc/graph.hpp"
#include "test_support.hpp"

using namespace kvc;
using namespace kvc::test;

TEST_CASE("vertex set canonicalizes and rejects duplicates") {
    VertexSet s({2, 0, 1});
    CHECK(s.members() == std::vector<int>{0, 1, 2});
    CHECK(s.contains(1));
    CHECK(!s.contains(3));
    CHECK_THROWS_AS(VertexSet({1, 1}), InvalidVertex);
}

TEST_CASE("graph construction validates and merges duplicates") {
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 2, 1.0}}), InvalidVertex);
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, -1.0}}), InvalidWeight);

    WeightedGraph g(3, {{1, 0, 1.0}, {0, 1, 2.0}, {2, 2, 0.5}});
    CHECK(g.num_edges() == 2);
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 1);
    CHECK(g.edges()[0].weight == 3.0);
    CHECK(g.loop_weight(2) == 0.5);
}

TEST_CASE("covered_weight on the reference graph") {
    auto g = g1();
    CHECK(covered_weight(g, VertexSet{1}) == 3.0);
    CHECK(covered_weight(g, VertexSet{}) == 0.0);
    CHECK(covered_weight(g, VertexSet{0, 1, 2}) == 3.5);
    CHECK_THROWS_AS(covered_weight(g, VertexSet{3}), InvalidVertex);
}

TEST_CASE("cross_weight on the reference graph") {
    auto g = g1();
    CHECK(cross_weight(g, VertexSet{0}, VertexSet{1}) == 2.0);
    CHECK(cross_weight(g, VertexSet{0}, VertexSet{2}) == 0.0);
    for (uint64_t mask = 0; mask < 8; ++mask) {
        auto s = set_of_mask(mask, 3);
        CHECK(cross_weight(g, s, s) == covered_weight(g, s));
    }
}

TEST_CASE("wdeg_set on the reference graph") {
    auto g = g1();
    CHECK(wdeg_set(g, VertexSet{1}) == 3.0);
    CHECK(wdeg_set(g, VertexSet{2}) == 1.5);  // loop counted once
    CHECK(wdeg_set(g, VertexSet{}) == 0.0);
}

TEST_CASE("degree_order") {
    CHECK(degree_order(g1()) == std::vector<int>{1, 0, 2});
    WeightedGraph zero(4, {{0, 1, 0.0}, {2, 3, 0.0}});
    CHECK(degree_order(zero) == std::vector<int>{0, 1, 2, 3});
    CHECK(degree_order(WeightedGraph(1)) == std::vector<int>{0});
}

TEST_CASE("induced_subgraph") {
    auto g = g1();
    auto sub = induced_subgraph(g, VertexSet{0, 1});
    CHECK(sub.graph.num_vertices() == 2);
    REQUIRE(sub.graph.num_edges() == 1);
    CHECK(sub.graph.edges()[0].weight == 2.0);
    CHECK(sub.to_original == std::vector<int>{0, 1});

    auto full = induced_subgraph(g, VertexSet{0, 1, 2});
    CHECK(full.graph.edges().size() == g.edges().size());
    for (size_t i = 0; i < g.edges().size(); ++i)
        CHECK(full.graph.edges()[i].weight == g.edges()[i].weight);

    auto empty = induced_subgraph(g, VertexSet{});
    CHECK(empty.graph.num_vertices() == 0);
    CHECK(empty.graph.num_edges() == 0);
}

TEST_CASE("coverage identities on random graphs") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = random_graph(seed, 1 + static_cast<int>(seed % 9), 0.5);
        int n = g.num_vertices();

        double wdeg_total = 0.0, nonloop = 0.0, loops = 0.0;
        for (int v = 0; v < n; ++v) wdeg_total += g.wdeg(v);
        for (const auto& e : g.edges()) (e.u == e.v ? loops : nonloop) += e.weight;
        CHECK(rel_close(wdeg_total, 2.0 * nonloop + loops));

        auto order = degree_order(g);
        std::vector<char> seen(n, 0);
        for (size_t i = 0; i < order.size(); ++i) {
            CHECK(!seen[order[i]]);
            seen[order[i]] = 1;
            if (i > 0) CHECK(g.wdeg(order[i - 1]) >= g.wdeg(order[i]));
        }

        for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
            auto s = set_of_mask(mask, n);
            double covered = covered_weight(g, s);
            CHECK(covered == coverage_by_mask(g, mask));

            // Inclusion-exclusion: covered = wdeg(S) - (non-loop weight inside S).
            double inside = 0.0;
            for (const auto& e : g.edges())
                if (e.u != e.v && (mask >> e.u & 1) && (mask >> e.v & 1)) inside += e.weight;
            CHECK(rel_close(covered, wdeg_set(g, s) - inside));

            CHECK(wdeg_set(g, s) <= 2.0 * covered + 1e-9);

            // Monotonicity: adding one vertex never decreases coverage.
            for (int v = 0; v < n; ++v) {
                if (mask >> v & 1) continue;
                CHECK(covered <= covered_weight(g, set_of_mask(mask | (1ull << v), n)) + 1e-12);
            }
        }

        // cross_weight symmetry on sampled pairs.
        for (uint64_t a = 0; a < (1ull << n); a += 3)
            for (uint64_t b = 1; b < (1ull << n); b += 5) {
                auto s = set_of_mask(a, n), t = set_of_mask(b, n);
                CHECK(cross_weight(g, s, t) == cross_weight(g, t, s));
            }
    }
}
