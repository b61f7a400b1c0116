#include <doctest.h>

#include <bit>
#include <cmath>

#include "kvc/max_kvc.hpp"
#include "kvc/oracle.hpp"
#include "test_support.hpp"

using namespace kvc;
using namespace kvc::test;

TEST_CASE("fptas_prefix_size follows the degree-prefix formula") {
    // n' = min{k + ceil(k/eps), n}; frozen values for the acceptance grid.
    CHECK(fptas_prefix_size(3, 1, 1.0) == 2);
    CHECK(fptas_prefix_size(100, 1, 0.1) == 11);
    CHECK(fptas_prefix_size(100, 3, 0.3) == 13);   // ceil(3/0.3) = 10, no float dust
    CHECK(fptas_prefix_size(100, 4, 0.3) == 18);   // ceil(4/0.3) = 14
    CHECK(fptas_prefix_size(100, 2, 0.5) == 6);
    CHECK(fptas_prefix_size(100, 4, 1.0) == 8);
    CHECK(fptas_prefix_size(5, 4, 0.1) == 5);      // clamped at n
    CHECK(fptas_prefix_size(10, 2, 5.0) == 3);     // eps >= k still applies verbatim
    CHECK(fptas_prefix_size(10, 0, 0.5) == 0);
    CHECK_THROWS_AS(fptas_prefix_size(10, 1, 0.0), InvalidEpsilon);
    CHECK_THROWS_AS(fptas_prefix_size(10, 1, -1.0), InvalidEpsilon);
}

TEST_CASE("fptas_max on the reference graph") {
    auto g = g1();
    auto r = fptas_max(g, 1, 1.0);
    CHECK(r.set == VertexSet{1});
    CHECK(r.value == 3.0);
    CHECK_THROWS_AS(fptas_max(g, 4, 1.0), InvalidK);
    CHECK_THROWS_AS(fptas_max(g, 1, 0.0), InvalidEpsilon);
}

TEST_CASE("fptas_max with k = n selects everything") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = random_graph(seed, 6, 0.5);
        auto r = fptas_max(g, 6, 0.7);
        CHECK(r.set.size() == 6);
        CHECK(rel_close(r.value, g.total_weight()));
    }
}

TEST_CASE("fptas_max guarantee against the oracle") {
    int cells = 0;
    for (uint64_t seed = 300; seed < 325; ++seed) {
        auto g = random_graph(seed, 10, 0.4);
        for (int k : {1, 2, 3})
            for (double eps : {0.3, 1.0}) {
                auto approx = fptas_max(g, k, eps);
                auto exact = brute_max_kvc(g, k);
                CHECK(approx.value >= (1.0 - eps) * exact.value - 1e-9);
                ++cells;
            }
    }
    CHECK(cells == 150);
}

TEST_CASE("fptas_max with full prefix equals the oracle exactly") {
    for (uint64_t seed = 400; seed < 410; ++seed) {
        auto g = random_graph(seed, 8, 0.5);
        for (int k : {1, 2, 3}) {
            // eps small enough that n' = n.
            auto approx = fptas_max(g, k, 0.1);
            auto exact = brute_max_kvc(g, k);
            REQUIRE(fptas_prefix_size(8, k, 0.1) == 8);
            CHECK(approx.value == exact.value);
            CHECK(approx.set == exact.set);
        }
    }
}

TEST_CASE("kernel_weighted on the reference graph") {
    auto kr = kernel_weighted(g1(), 1, 1.0);
    // n' = 2; kept vertices in degree order are 1 then 0.
    CHECK(kr.reduced.num_vertices() == 2);
    CHECK(kr.id_map == std::vector<int>{1, 0});
    CHECK(kr.committed.empty());
    CHECK(kr.k == 1);
    // Edge (0,1) kept with weight 2.0; discarded vertex 2 folds w(1,2) = 1.0
    // into the loop of reduced vertex 0 (original 1); original 0 gets no loop.
    CHECK(kr.reduced.loop_weight(0) == 1.0);
    CHECK(kr.reduced.loop_weight(1) == 0.0);
    // Exactness: coverage inside the kernel equals coverage of {1, 0} in g1.
    CHECK(covered_weight(kr.reduced, VertexSet{0, 1}) == 3.0);
}

TEST_CASE("kernel_weighted keeps everything when n <= n'") {
    auto g = random_graph(42, 5, 0.6);
    auto kr = kernel_weighted(g, 2, 1.0);  // n' = min{4, 5} = 4 < 5, so shrink
    CHECK(kr.reduced.num_vertices() == 4);
    auto kr_full = kernel_weighted(g, 3, 0.5);  // n' = min{9, 5} = 5
    CHECK(kr_full.reduced.num_vertices() == 5);
    CHECK(rel_close(kr_full.reduced.total_weight(), g.total_weight()));
}

TEST_CASE("kernel_weighted coverage is exact for every kernel subset") {
    for (uint64_t seed = 500; seed < 520; ++seed) {
        auto g = random_graph(seed, 2 + static_cast<int>(seed % 9), 0.5);
        int n = g.num_vertices();
        for (int k = 0; k <= std::min(3, n); ++k)
            for (double eps : {0.5, 1.0}) {
                auto kr = kernel_weighted(g, k, eps);
                int reduced_n = kr.reduced.num_vertices();
                CHECK(reduced_n <= k + static_cast<int>(std::ceil(k / eps - 1e-9)));
                for (uint64_t mask = 0; mask < (1ull << reduced_n); ++mask) {
                    auto reduced_set = set_of_mask(mask, reduced_n);
                    std::vector<int> original;
                    for (int r : reduced_set) original.push_back(kr.id_map[r]);
                    double in_kernel = covered_weight(kr.reduced, reduced_set);
                    double in_original = covered_weight(g, VertexSet(original));
                    CHECK(rel_close(in_kernel, in_original));
                }
            }
    }
}

TEST_CASE("lift_solution") {
    SUBCASE("weighted kernel maps ids through") {
        auto kr = kernel_weighted(g1(), 1, 1.0);
        CHECK(lift_solution(kr, VertexSet{0}) == VertexSet{1});
        CHECK(lift_solution(kr, VertexSet{1}) == VertexSet{0});
    }
    SUBCASE("padded vertices are dropped and replaced") {
        KernelResult kr;
        kr.reduced = WeightedGraph(3, {{0, 1, 1.0}});
        kr.k = 2;
        kr.original_n = 6;
        kr.id_map = {4, 5, KernelResult::kPaddedVertex};
        kr.epsilon = 0.5;
        auto lifted = lift_solution(kr, VertexSet{0, 2});
        CHECK(lifted == VertexSet{0, 4});  // padded dropped, lowest unused id added
    }
    SUBCASE("committed vertices are always included") {
        KernelResult kr;
        kr.reduced = WeightedGraph(0);
        kr.k = 1;
        kr.original_n = 6;
        kr.committed = VertexSet{5};
        kr.epsilon = 0.5;
        CHECK(lift_solution(kr, VertexSet{}) == VertexSet{5});
    }
    SUBCASE("size violations raise LiftError") {
        KernelResult kr;
        kr.reduced = WeightedGraph(2, {{0, 1, 1.0}});
        kr.k = 1;
        kr.original_n = 4;
        kr.id_map = {0, 1};
        CHECK_THROWS_AS(lift_solution(kr, VertexSet{0, 1}), LiftError);
        CHECK_THROWS_AS(lift_solution(kr, VertexSet{7}), LiftError);
    }
}

TEST_CASE("kernel_unweighted input validation") {
    CHECK_THROWS_AS(kernel_unweighted(g1(), 1, 0.5), NotUnweighted);
    auto g = random_unweighted_graph(1, 8, 0.4);
    CHECK_THROWS_AS(kernel_unweighted(g, 1, 1.5), InvalidEpsilon);
    CHECK_THROWS_AS(kernel_unweighted(g, 9, 0.5), InvalidK);
}

TEST_CASE("kernel_unweighted commits a high-degree star center") {
    // Star K_{1,6}: center degree 6 >= ceil(1/0.5) = 2, so stage 1 fires.
    std::vector<WeightedEdge> edges;
    for (int leaf = 1; leaf <= 6; ++leaf) edges.push_back({0, leaf, 1.0});
    WeightedGraph star(7, edges);
    auto kr = kernel_unweighted(star, 1, 0.5);
    CHECK(kr.committed == VertexSet{0});
    CHECK(kr.residual_k() == 0);
    CHECK(kr.reduced.num_vertices() == 0);
    CHECK(lift_solution(kr, VertexSet{}) == VertexSet{0});
}

TEST_CASE("kernel_unweighted is the identity on small low-degree graphs") {
    // Path on 4 vertices: max degree 2 < ceil(2/0.9) = 3 and n <= n'.
    WeightedGraph path(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
    auto kr = kernel_unweighted(path, 2, 0.9);
    CHECK(kr.committed.empty());
    CHECK(kr.reduced.num_vertices() == 4);
    CHECK(kr.reduced.num_edges() == 3);
    CHECK(kr.reduced.is_unweighted_simple());
}

TEST_CASE("kernel_unweighted end-to-end guarantee on random instances") {
    for (uint64_t seed = 600; seed < 640; ++seed) {
        auto g = random_unweighted_graph(seed, 12, 0.4);
        for (int k : {1, 2, 3})
            for (double eps : {0.5, 1.0}) {
                auto kr = kernel_unweighted(g, k, eps);
                CHECK(kr.reduced.is_unweighted_simple());
                auto reduced_best = brute_max_kvc(kr.reduced, kr.residual_k());
                auto lifted = lift_solution(kr, reduced_best.set);
                CHECK(lifted.size() == k);
                double lifted_value = covered_weight(g, lifted);
                double oracle = brute_max_kvc(g, k).value;
                CHECK(lifted_value >= (1.0 - eps) * oracle - 1e-9);
            }
    }
}

TEST_CASE("greedy_max") {
    auto g = g1();
    auto r = greedy_max(g, 1);
    CHECK(r.set == VertexSet{1});
    CHECK(r.value == 3.0);

    WeightedGraph edgeless(5);
    auto re = greedy_max(edgeless, 3);
    CHECK(re.set == VertexSet{0, 1, 2});
    CHECK(re.value == 0.0);

    const double ratio = 1.0 - 1.0 / std::exp(1.0);
    for (uint64_t seed = 700; seed < 730; ++seed) {
        auto g2 = random_graph(seed, 10, 0.4);
        for (int k : {1, 2, 3}) {
            auto greedy = greedy_max(g2, k);
            auto exact = brute_max_kvc(g2, k);
            CHECK(greedy.value >= ratio * exact.value - 1e-9);
        }
    }
}

TEST_CASE("solve_via_2sat_pipeline") {
    auto g = g1();

    SUBCASE("brute-force solver reduces to the FPT-AS guarantee") {
        TwoSatCcSolver brute = [](const Max2SatCcInstance& inst) {
            std::vector<bool> best;
            double best_value = -1.0;
            for (uint64_t mask = 0; mask < (1ull << inst.num_vars); ++mask) {
                if (std::popcount(mask) != inst.cardinality) continue;
                std::vector<bool> assignment(inst.num_vars);
                for (int v = 0; v < inst.num_vars; ++v) assignment[v] = mask >> v & 1;
                double value = satisfied_weight(inst, assignment);
                if (value > best_value) {
                    best_value = value;
                    best = assignment;
                }
            }
            return best;
        };
        for (uint64_t seed = 800; seed < 815; ++seed) {
            auto g2 = random_graph(seed, 9, 0.5);
            for (int k : {1, 2, 3})
                for (double eps : {0.5, 1.0}) {
                    auto result = solve_via_2sat_pipeline(g2, k, eps, brute);
                    auto exact = brute_max_kvc(g2, k);
                    CHECK(result.value >= (1.0 - eps) * exact.value - 1e-9);
                }
        }
    }

    SUBCASE("default local search finds the optimum on the reference graph") {
        auto r = solve_via_2sat_pipeline(g, 1, 0.5);
        CHECK(r.value == 3.0);
    }

    SUBCASE("k = 0 returns the empty solution") {
        auto r = solve_via_2sat_pipeline(g, 0, 0.5);
        CHECK(r.set.empty());
        CHECK(r.value == 0.0);
    }

    SUBCASE("cardinality violations are rejected") {
        TwoSatCcSolver broken = [](const Max2SatCcInstance& inst) {
            return std::vector<bool>(inst.num_vars, true);
        };
        CHECK_THROWS_AS(solve_via_2sat_pipeline(g, 1, 0.5, broken), SolverContractError);
    }
}
