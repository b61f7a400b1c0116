#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kvc/graph.hpp"

namespace kvc {

/// One benchmark cell result; serialized as a JSON line by run_bench.
struct RunReport {
    int cell = 0;
    std::string instance;
    int n = 0;
    int m = 0;
    std::string algorithm;
    int k = 0;
    bool has_epsilon = false;
    double epsilon = 0.0;
    bool has_trials = false;
    int trials = 0;
    uint64_t seed = 0;
    double value = 0.0;
    std::vector<int> witness;
    double wall_ms = 0.0;
    bool has_oracle = false;
    double oracle = 0.0;
    double ratio = 0.0;  // value/oracle; <= 1 for max algorithms, >= 1 for min
    bool has_alg1_stats = false;
    uint64_t alg1_leaves = 0;
    double alg1_branching = 0.0;  // empirical per-vertex branching factor
};

struct AlgorithmSummary {
    std::string algorithm;
    bool maximization = false;
    int cells = 0;
    int cells_with_oracle = 0;
    bool has_worst_ratio = false;
    double worst_ratio = 0.0;
};

struct BenchSummary {
    int cells = 0;
    std::map<std::string, AlgorithmSummary> per_algorithm;
};

struct BenchConfig {
    std::vector<std::string> instance_paths;
    // Known names: fptas_max, greedy_max, twosat_max, min_kvc, greedy_min.
    std::vector<std::string> algorithms;
    std::vector<int> ks;
    std::vector<double> epsilons;  // used by epsilon-dependent algorithms
    uint64_t seed = 1;
    int trials = 0;  // 0 = auto (min_kvc only)
    double p_fail = 1e-3;
    // Oracle comparison is auto-enabled for n <= 20 and k <= 5. Forcing it
    // beyond that cap raises OracleTooLarge.
    bool force_oracle = false;
};

constexpr int kOracleMaxVertices = 20;
constexpr int kOracleMaxK = 5;

/// Runs every (instance, algorithm, k[, epsilon]) cell, streaming one JSON
/// record per cell to jsonl_out plus summary records; a human-readable table
/// goes to table_out when non-null.
BenchSummary run_bench(const BenchConfig& config, std::ostream& jsonl_out,
                       std::ostream* table_out = nullptr);

}  // namespace kvc
