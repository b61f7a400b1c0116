#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kvc/bench.hpp"
#include "kvc/io.hpp"
#include "test_support.hpp"

using namespace kvc;
using namespace kvc::test;
using nlohmann::json;

namespace {

std::string temp_instance(uint64_t seed, int n, double density, bool unweighted = false) {
    auto dir = std::filesystem::temp_directory_path() / "kvcover_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / ("bench_" + std::to_string(seed) + "_" + std::to_string(n) + ".wvc");
    GenParams params;
    params.n = n;
    params.density = density;
    params.unweighted = unweighted;
    params.seed = seed;
    save_graph(path.string(), gen_random(params));
    return path.string();
}

std::vector<json> parse_jsonl(const std::string& text) {
    std::vector<json> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) records.push_back(json::parse(line));
    return records;
}

}  // namespace

TEST_CASE("bench streams one record per cell plus summaries") {
    BenchConfig config;
    config.instance_paths = {temp_instance(1, 9, 0.4), temp_instance(2, 9, 0.4)};
    config.algorithms = {"fptas_max", "greedy_max", "min_kvc"};
    config.ks = {1, 2};
    config.epsilons = {0.5, 1.0};
    config.seed = 7;
    config.trials = 2;

    std::ostringstream out;
    auto summary = run_bench(config, out);
    auto records = parse_jsonl(out.str());

    // 2 instances x 2 k x (2 eps fptas + 1 greedy + 2 eps min_kvc) = 20 runs.
    int runs = 0, summaries = 0;
    for (const auto& r : records) {
        if (r["type"] == "run") ++runs;
        if (r["type"] == "summary") ++summaries;
    }
    CHECK(runs == 20);
    CHECK(summaries == 3);
    CHECK(summary.cells == 20);

    for (const auto& r : records) {
        if (r["type"] != "run") continue;
        CHECK(r.contains("oracle"));  // auto-enabled at this size
        CHECK(r.contains("ratio"));
        CHECK(r.contains("wall_ms"));
        if (r["algorithm"] == "min_kvc") {
            CHECK(r.contains("trials"));
            CHECK(r.contains("seed"));
            CHECK(r.contains("alg1_leaves"));
        }
        if (r["algorithm"] == "fptas_max") {
            double ratio = r["ratio"];
            double eps = r["epsilon"];
            CHECK(ratio >= 1.0 - eps - 1e-9);
        }
    }

    CHECK(summary.per_algorithm.at("fptas_max").worst_ratio >= 0.5 - 1e-9);
    CHECK(summary.per_algorithm.at("min_kvc").worst_ratio >= 1.0 - 1e-9);
}

TEST_CASE("bench with no instances emits nothing") {
    BenchConfig config;
    config.algorithms = {"fptas_max"};
    config.ks = {1};
    config.epsilons = {0.5};
    std::ostringstream out;
    auto summary = run_bench(config, out);
    CHECK(summary.cells == 0);
    CHECK(out.str().empty());
}

TEST_CASE("forcing the oracle beyond the cap fails") {
    BenchConfig config;
    config.instance_paths = {temp_instance(3, 24, 0.2)};
    config.algorithms = {"greedy_max"};
    config.ks = {2};
    config.force_oracle = true;
    std::ostringstream out;
    CHECK_THROWS_AS(run_bench(config, out), OracleTooLarge);
}

TEST_CASE("bench reports are deterministic for fixed flags and seed") {
    BenchConfig config;
    config.instance_paths = {temp_instance(4, 8, 0.5)};
    config.algorithms = {"min_kvc", "twosat_max"};
    config.ks = {2};
    config.epsilons = {0.5};
    config.seed = 11;
    config.trials = 3;
    std::ostringstream a, b;
    run_bench(config, a);
    run_bench(config, b);
    // Strip wall_ms, the only nondeterministic field.
    auto strip = [](const std::string& text) {
        auto records = parse_jsonl(text);
        for (auto& r : records) r.erase("wall_ms");
        return records;
    };
    CHECK(strip(a.str()) == strip(b.str()));
}
