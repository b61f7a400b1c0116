// kvc: generator, solvers, kernelizers, exporters, oracles, and the bench
// harness behind one command-line tool.
//
// Exit codes: 0 success, 2 parse/validation error, 3 infeasible, 4 internal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kvc/bench.hpp"
#include "kvc/io.hpp"
#include "kvc/max_kvc.hpp"
#include "kvc/min_kvc.hpp"
#include "kvc/oracle.hpp"
#include "kvc/two_sat.hpp"
#include "kvc/util.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        kvc::write_text_file(path, content);
}

struct SolveOutput {
    std::string algorithm;
    int k = 0;
    std::optional<double> epsilon;
    std::optional<int> trials;
    std::optional<uint64_t> seed;
    kvc::Solution solution;
    double wall_ms = 0.0;
};

void print_solution(const SolveOutput& out, bool as_json) {
    if (as_json) {
        json j;
        j["algorithm"] = out.algorithm;
        j["k"] = out.k;
        if (out.epsilon) j["epsilon"] = *out.epsilon;
        if (out.trials) j["trials"] = *out.trials;
        if (out.seed) j["seed"] = *out.seed;
        j["value"] = out.solution.value;
        j["set"] = out.solution.set.members();
        j["wall_ms"] = out.wall_ms;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "algorithm " << out.algorithm << "\n";
    std::cout << "value " << kvc::format_double(out.solution.value) << "\n";
    std::cout << "set";
    for (int v : out.solution.set) std::cout << " " << v;
    std::cout << "\n";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Weighted Max/Min k-Vertex Cover toolkit"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    kvc::GenParams gen_params;
    std::string gen_output = "-";
    gen->add_option("--n", gen_params.n, "Vertex count")->required();
    gen->add_option("--density", gen_params.density, "Edge probability in [0,1]")->required();
    gen->add_option("--loop-prob", gen_params.loop_prob, "Self-loop probability");
    gen->add_flag("--unweighted", gen_params.unweighted, "All weights 1, no loops");
    gen->add_option("--weight-decimals", gen_params.weight_decimals,
                    "Decimals kept in random weights");
    gen->add_option("--seed", gen_params.seed, "RNG seed");
    gen->add_option("--output,-o", gen_output, "Output path ('-' = stdout)");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "Run an approximation algorithm");
    solve->require_subcommand(1);
    std::string solve_input, solve_algo = "fptas", solve_coloring;
    int solve_k = 0, solve_trials = 0;
    double solve_eps = 0.5, solve_pfail = 1e-3;
    uint64_t solve_seed = 1;
    bool solve_json = false;

    auto* solve_max = solve->add_subcommand("max-kvc", "Maximize covered weight");
    solve_max->add_option("--input,-i", solve_input, "Instance file")->required();
    solve_max->add_option("--k", solve_k, "Solution size")->required();
    solve_max->add_option("--algo", solve_algo, "fptas | greedy | 2sat")
        ->check(CLI::IsMember({"fptas", "greedy", "2sat"}));
    solve_max->add_option("--epsilon", solve_eps, "Approximation parameter");
    solve_max->add_option("--seed", solve_seed, "RNG seed (2sat local search)");
    solve_max->add_flag("--json", solve_json, "JSON output");

    auto* solve_min = solve->add_subcommand("min-kvc", "Minimize covered weight");
    solve_min->add_option("--input,-i", solve_input, "Instance file")->required();
    solve_min->add_option("--k", solve_k, "Solution size")->required();
    solve_min->add_option("--algo", solve_algo, "fptas | greedy")
        ->check(CLI::IsMember({"fptas", "greedy"}));
    solve_min->add_option("--epsilon", solve_eps, "Approximation parameter");
    solve_min->add_option("--trials", solve_trials, "Color-coding trials (0 = auto)");
    solve_min->add_option("--p-fail", solve_pfail, "Failure probability for auto trials");
    solve_min->add_option("--seed", solve_seed, "RNG seed for colorings");
    solve_min->add_option("--coloring", solve_coloring,
                          "Coloring file: solve the multicolored variant directly");
    solve_min->add_flag("--json", solve_json, "JSON output");

    // ---- kernelize ----
    auto* kernelize = app.add_subcommand("kernelize", "Reduce an instance");
    std::string kern_input, kern_mode, kern_output = "-";
    int kern_k = 0;
    double kern_eps = 0.5;
    bool kern_json = false;
    kernelize->add_option("--input,-i", kern_input, "Instance file")->required();
    kernelize->add_option("--k", kern_k, "Solution size")->required();
    kernelize->add_option("--epsilon", kern_eps, "Approximation parameter");
    kernelize->add_option("--mode", kern_mode, "weighted | unweighted")
        ->required()
        ->check(CLI::IsMember({"weighted", "unweighted"}));
    kernelize->add_option("--output,-o", kern_output, "Reduced instance path ('-' = stdout)");
    kernelize->add_flag("--json", kern_json, "Emit lifting metadata as JSON on stdout");

    // ---- export-2sat ----
    auto* export2sat = app.add_subcommand("export-2sat", "Write the 2SAT-CC formulation");
    std::string exp_input, exp_output = "-";
    int exp_k = 0;
    export2sat->add_option("--input,-i", exp_input, "Instance file")->required();
    export2sat->add_option("--k", exp_k, "Cardinality constraint")->required();
    export2sat->add_option("--output,-o", exp_output, "Output path ('-' = stdout)");

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "Exact brute-force solvers");
    oracle->require_subcommand(1);
    std::string oracle_input, oracle_coloring;
    int oracle_k = 0;
    bool oracle_force = false, oracle_json = false;
    auto add_oracle_common = [&](CLI::App* sub, bool with_coloring) {
        sub->add_option("--input,-i", oracle_input, "Instance file")->required();
        sub->add_option("--k", oracle_k, "Solution size")->required();
        sub->add_flag("--force", oracle_force, "Run beyond the n <= 20, k <= 5 cap");
        sub->add_flag("--json", oracle_json, "JSON output");
        if (with_coloring)
            sub->add_option("--coloring", oracle_coloring, "Coloring file")->required();
    };
    auto* oracle_max = oracle->add_subcommand("max", "Exact Max k-VC");
    add_oracle_common(oracle_max, false);
    auto* oracle_min = oracle->add_subcommand("min", "Exact Min k-VC");
    add_oracle_common(oracle_min, false);
    auto* oracle_mc = oracle->add_subcommand("multicolored-min", "Exact Multicolored Min k-VC");
    add_oracle_common(oracle_mc, true);

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "Run the benchmark harness");
    kvc::BenchConfig bench_config;
    std::string bench_output = "-";
    bench->add_option("--input,-i", bench_config.instance_paths, "Instance files")
        ->required()
        ->take_all();
    bench->add_option("--algos", bench_config.algorithms,
                      "fptas_max,greedy_max,twosat_max,min_kvc,greedy_min")
        ->required()
        ->delimiter(',');
    bench->add_option("--k", bench_config.ks, "k values")->required()->delimiter(',');
    bench->add_option("--epsilons", bench_config.epsilons, "epsilon values")->delimiter(',');
    bench->add_option("--seed", bench_config.seed, "RNG seed");
    bench->add_option("--trials", bench_config.trials, "min_kvc trials (0 = auto)");
    bench->add_option("--p-fail", bench_config.p_fail, "min_kvc failure probability");
    bench->add_flag("--force-oracle", bench_config.force_oracle,
                    "Fail instead of skipping oracle comparison beyond the cap");
    bench->add_option("--output,-o", bench_output, "JSON-lines path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or requested help text
        return code == 0 ? kExitOk : kExitValidation;
    }

    if (gen->parsed()) {
        emit(gen_output, kvc::write_graph(kvc::gen_random(gen_params)));
        return kExitOk;
    }

    if (solve->parsed()) {
        auto g = kvc::load_graph(solve_input);
        SolveOutput out;
        out.k = solve_k;
        Timer timer;
        if (solve->got_subcommand(solve_max)) {
            if (solve_algo == "fptas") {
                out.algorithm = "fptas_max";
                out.epsilon = solve_eps;
                out.solution = kvc::fptas_max(g, solve_k, solve_eps);
            } else if (solve_algo == "greedy") {
                out.algorithm = "greedy_max";
                out.solution = kvc::greedy_max(g, solve_k);
            } else {
                out.algorithm = "twosat_max";
                out.epsilon = solve_eps;
                out.seed = solve_seed;
                out.solution = kvc::solve_via_2sat_pipeline(g, solve_k, solve_eps, solve_seed);
            }
        } else {
            if (solve_algo == "greedy") {
                out.algorithm = "greedy_min";
                out.solution = kvc::greedy_min(g, solve_k);
            } else if (!solve_coloring.empty()) {
                out.algorithm = "multicolored_min_kvc";
                out.epsilon = solve_eps;
                auto chi = kvc::load_coloring(solve_coloring);
                auto result = kvc::multicolored_min_kvc(g, solve_k, chi, solve_eps);
                if (!result) {
                    std::cerr << "infeasible: no colorful k-set exists\n";
                    return kExitInfeasible;
                }
                out.solution = *result;
            } else {
                out.algorithm = "min_kvc_fptas";
                kvc::MinKvcOptions options;
                options.epsilon = solve_eps;
                options.trials = solve_trials;
                options.p_fail = solve_pfail;
                options.seed = solve_seed;
                out.epsilon = solve_eps;
                out.seed = solve_seed;
                out.trials = solve_trials > 0 ? solve_trials
                                              : kvc::auto_trial_count(solve_k, solve_pfail);
                out.solution = kvc::min_kvc_fptas(g, solve_k, options);
            }
        }
        out.wall_ms = timer.elapsed_ms();
        print_solution(out, solve_json);
        return kExitOk;
    }

    if (kernelize->parsed()) {
        auto g = kvc::load_graph(kern_input);
        kvc::KernelResult kr = kern_mode == "weighted"
                                   ? kvc::kernel_weighted(g, kern_k, kern_eps)
                                   : kvc::kernel_unweighted(g, kern_k, kern_eps);
        emit(kern_output, kvc::write_graph(kr.reduced));
        if (kern_json) {
            json j;
            j["mode"] = kern_mode;
            j["original_n"] = kr.original_n;
            j["reduced_n"] = kr.reduced.num_vertices();
            j["k"] = kr.k;
            j["residual_k"] = kr.residual_k();
            j["epsilon"] = kr.epsilon;
            j["id_map"] = kr.id_map;
            j["committed"] = kr.committed.members();
            std::cout << j.dump() << "\n";
        } else {
            std::cerr << "reduced " << kr.original_n << " -> " << kr.reduced.num_vertices()
                      << " vertices, committed " << kr.committed.size() << ", residual k "
                      << kr.residual_k() << "\n";
        }
        return kExitOk;
    }

    if (export2sat->parsed()) {
        auto g = kvc::load_graph(exp_input);
        emit(exp_output, kvc::write_wcnf_cc(kvc::to_max2sat_cc(g, exp_k)));
        return kExitOk;
    }

    if (oracle->parsed()) {
        auto g = kvc::load_graph(oracle_input);
        if (!oracle_force &&
            (g.num_vertices() > kvc::kOracleMaxVertices || oracle_k > kvc::kOracleMaxK))
            throw kvc::OracleTooLarge(
                "instance beyond the n <= 20, k <= 5 oracle cap; pass --force to override");
        SolveOutput out;
        out.k = oracle_k;
        Timer timer;
        if (oracle->got_subcommand(oracle_max)) {
            out.algorithm = "brute_max_kvc";
            out.solution = kvc::brute_max_kvc(g, oracle_k);
        } else if (oracle->got_subcommand(oracle_min)) {
            out.algorithm = "brute_min_kvc";
            out.solution = kvc::brute_min_kvc(g, oracle_k);
        } else {
            out.algorithm = "brute_multicolored_min_kvc";
            auto chi = kvc::load_coloring(oracle_coloring);
            auto result = kvc::brute_multicolored_min_kvc(g, oracle_k, chi);
            if (!result) {
                std::cerr << "infeasible: no colorful k-set exists\n";
                return kExitInfeasible;
            }
            out.solution = *result;
        }
        out.wall_ms = timer.elapsed_ms();
        print_solution(out, oracle_json);
        return kExitOk;
    }

    if (bench->parsed()) {
        if (bench_output.empty() || bench_output == "-") {
            kvc::run_bench(bench_config, std::cout, &std::cerr);
        } else {
            std::ofstream out(bench_output);
            if (!out) throw kvc::Error("cannot open file for writing: " + bench_output);
            kvc::run_bench(bench_config, out, &std::cerr);
        }
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kvc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const kvc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
