#include <benchmark/benchmark.h>

#include "kvc/io.hpp"
#include "kvc/max_kvc.hpp"
#include "kvc/min_kvc.hpp"
#include "kvc/oracle.hpp"
#include "kvc/two_sat.hpp"

namespace {

kvc::WeightedGraph make_graph(int n, double density, bool unweighted, uint64_t seed) {
    kvc::GenParams params;
    params.n = n;
    params.density = density;
    params.loop_prob = unweighted ? 0.0 : 0.2;
    params.unweighted = unweighted;
    params.seed = seed;
    return kvc::gen_random(params);
}

void BM_covered_weight(benchmark::State& state) {
    auto g = make_graph(static_cast<int>(state.range(0)), 0.3, false, 1);
    std::vector<int> members;
    for (int v = 0; v < g.num_vertices(); v += 3) members.push_back(v);
    kvc::VertexSet set(members);
    for (auto _ : state) benchmark::DoNotOptimize(kvc::covered_weight(g, set));
}
BENCHMARK(BM_covered_weight)->Arg(64)->Arg(256)->Arg(1024);

void BM_brute_max(benchmark::State& state) {
    auto g = make_graph(16, 0.4, false, 2);
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kvc::brute_max_kvc(g, k));
}
BENCHMARK(BM_brute_max)->Arg(2)->Arg(4)->Arg(6);

void BM_fptas_max(benchmark::State& state) {
    auto g = make_graph(static_cast<int>(state.range(0)), 0.3, false, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kvc::fptas_max(g, 4, 0.5));
}
BENCHMARK(BM_fptas_max)->Arg(64)->Arg(256)->Arg(1024);

void BM_kernel_weighted(benchmark::State& state) {
    auto g = make_graph(static_cast<int>(state.range(0)), 0.3, false, 4);
    for (auto _ : state) benchmark::DoNotOptimize(kvc::kernel_weighted(g, 4, 0.25));
}
BENCHMARK(BM_kernel_weighted)->Arg(256)->Arg(1024);

void BM_multicolored_min(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto g = make_graph(n, 0.25, true, 5);
    auto chi = kvc::Coloring::round_robin(n, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(kvc::multicolored_min_kvc(g, 3, chi, 0.5));
}
BENCHMARK(BM_multicolored_min)->Arg(12)->Arg(20)->Arg(28);

void BM_local_search_2sat(benchmark::State& state) {
    auto g = make_graph(static_cast<int>(state.range(0)), 0.4, false, 6);
    auto inst = kvc::to_max2sat_cc(g, g.num_vertices() / 4);
    for (auto _ : state) benchmark::DoNotOptimize(kvc::local_search_max2sat_cc(inst));
}
BENCHMARK(BM_local_search_2sat)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
