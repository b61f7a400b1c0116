#include "kvc/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "kvc/io.hpp"
#include "kvc/max_kvc.hpp"
#include "kvc/min_kvc.hpp"
#include "kvc/oracle.hpp"

namespace kvc {

namespace {

using nlohmann::json;

bool is_maximization(const std::string& algorithm) {
    return algorithm == "fptas_max" || algorithm == "greedy_max" || algorithm == "twosat_max";
}

bool uses_epsilon(const std::string& algorithm) {
    return algorithm == "fptas_max" || algorithm == "twosat_max" || algorithm == "min_kvc";
}

json to_json(const RunReport& r) {
    json j;
    j["type"] = "run";
    j["cell"] = r.cell;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["algorithm"] = r.algorithm;
    j["k"] = r.k;
    if (r.has_epsilon) j["epsilon"] = r.epsilon;
    if (r.has_trials) j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["value"] = r.value;
    j["witness"] = r.witness;
    j["wall_ms"] = r.wall_ms;
    if (r.has_oracle) {
        j["oracle"] = r.oracle;
        j["ratio"] = r.ratio;
    }
    if (r.has_alg1_stats) {
        j["alg1_leaves"] = r.alg1_leaves;
        j["alg1_branching"] = r.alg1_branching;
    }
    return j;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

BenchSummary run_bench(const BenchConfig& config, std::ostream& jsonl_out,
                       std::ostream* table_out) {
    BenchSummary summary;
    int cell_id = 0;

    for (const auto& path : config.instance_paths) {
        WeightedGraph g = load_graph(path);
        std::map<int, Solution> oracle_max_cache, oracle_min_cache;

        for (int k : config.ks) {
            if (k < 0 || k > g.num_vertices()) continue;  // cell not applicable
            bool oracle_ok = g.num_vertices() <= kOracleMaxVertices && k <= kOracleMaxK;
            if (config.force_oracle && !oracle_ok)
                throw OracleTooLarge("oracle requested for n = " +
                                     std::to_string(g.num_vertices()) + ", k = " +
                                     std::to_string(k) + " beyond the n <= 20, k <= 5 cap");

            for (const auto& algorithm : config.algorithms) {
                std::vector<double> eps_grid =
                    uses_epsilon(algorithm) ? config.epsilons : std::vector<double>{0.0};
                for (double eps : eps_grid) {
                    RunReport r;
                    r.cell = cell_id++;
                    r.instance = path;
                    r.n = g.num_vertices();
                    r.m = g.num_edges();
                    r.algorithm = algorithm;
                    r.k = k;
                    r.seed = config.seed;
                    if (uses_epsilon(algorithm)) {
                        r.has_epsilon = true;
                        r.epsilon = eps;
                    }

                    Timer timer;
                    Solution solution;
                    if (algorithm == "fptas_max") {
                        solution = fptas_max(g, k, eps);
                    } else if (algorithm == "greedy_max") {
                        solution = greedy_max(g, k);
                    } else if (algorithm == "twosat_max") {
                        solution = solve_via_2sat_pipeline(g, k, eps, config.seed);
                    } else if (algorithm == "greedy_min") {
                        solution = greedy_min(g, k);
                    } else if (algorithm == "min_kvc") {
                        MinKvcOptions options;
                        options.epsilon = eps;
                        options.trials = config.trials;
                        options.p_fail = config.p_fail;
                        options.seed = config.seed;
                        SubgraphGenStats stats;
                        solution = min_kvc_fptas(g, k, options, &stats);
                        r.has_trials = true;
                        r.trials = options.trials > 0 ? options.trials
                                                      : auto_trial_count(k, options.p_fail);
                        r.has_alg1_stats = true;
                        r.alg1_leaves = stats.leaves;
                        // Empirical branching constant from the leaf bound
                        // (C/eps)^(2k-2), reported but never asserted.
                        if (k >= 2 && stats.max_leaves_per_start > 0)
                            r.alg1_branching =
                                eps * std::pow(static_cast<double>(stats.max_leaves_per_start),
                                               1.0 / (2.0 * k - 2.0));
                    } else {
                        throw InvalidParams("unknown algorithm: " + algorithm);
                    }
                    r.wall_ms = timer.elapsed_ms();
                    r.value = solution.value;
                    r.witness = solution.set.members();

                    if (oracle_ok) {
                        bool maximize = is_maximization(algorithm);
                        auto& cache = maximize ? oracle_max_cache : oracle_min_cache;
                        auto it = cache.find(k);
                        if (it == cache.end())
                            it = cache.emplace(k, maximize ? brute_max_kvc(g, k)
                                                           : brute_min_kvc(g, k)).first;
                        r.has_oracle = true;
                        r.oracle = it->second.value;
                        r.ratio = r.oracle == 0.0 && r.value == 0.0 ? 1.0 : r.value / r.oracle;
                    }

                    jsonl_out << to_json(r).dump() << "\n";

                    auto& alg = summary.per_algorithm[algorithm];
                    alg.algorithm = algorithm;
                    alg.maximization = is_maximization(algorithm);
                    ++alg.cells;
                    ++summary.cells;
                    if (r.has_oracle) {
                        ++alg.cells_with_oracle;
                        bool worse = !alg.has_worst_ratio ||
                                     (alg.maximization ? r.ratio < alg.worst_ratio
                                                       : r.ratio > alg.worst_ratio);
                        if (worse) {
                            alg.has_worst_ratio = true;
                            alg.worst_ratio = r.ratio;
                        }
                    }
                }
            }
        }
    }

    for (const auto& [name, alg] : summary.per_algorithm) {
        json j;
        j["type"] = "summary";
        j["algorithm"] = name;
        j["objective"] = alg.maximization ? "max" : "min";
        j["cells"] = alg.cells;
        j["cells_with_oracle"] = alg.cells_with_oracle;
        if (alg.has_worst_ratio) j["worst_ratio"] = alg.worst_ratio;
        jsonl_out << j.dump() << "\n";
    }

    if (table_out) {
        *table_out << "algorithm      cells  with-oracle  worst-ratio\n";
        for (const auto& [name, alg] : summary.per_algorithm) {
            char line[128];
            if (alg.has_worst_ratio)
                std::snprintf(line, sizeof(line), "%-14s %5d  %11d  %11.6f\n", name.c_str(),
                              alg.cells, alg.cells_with_oracle, alg.worst_ratio);
            else
                std::snprintf(line, sizeof(line), "%-14s %5d  %11d  %11s\n", name.c_str(),
                              alg.cells, alg.cells_with_oracle, "-");
            *table_out << line;
        }
    }
    return summary;
}

}  // namespace kvc
