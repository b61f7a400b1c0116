#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kvc/graph.hpp"

namespace kvc {

/// Monotone clause of one or two positive literals. Variables are 0-based;
/// b == kUnit marks a unit clause.
struct Max2SatClause {
    static constexpr int kUnit = -1;
    int a = 0;
    int b = kUnit;
    double weight = 0.0;

    bool is_unit() const { return b == kUnit; }
    bool operator==(const Max2SatClause&) const = default;
};

/// Weighted Max 2SAT instance with the cardinality constraint
/// "exactly `cardinality` variables true".
struct Max2SatCcInstance {
    int num_vars = 0;
    std::vector<Max2SatClause> clauses;
    int cardinality = 0;
};

/// Formulates Max k-VC as 2SAT-CC: one variable per vertex, one binary
/// clause per positive-weight edge, one unit clause per positive-weight
/// self-loop. Satisfied weight of any assignment equals the covered weight
/// of its true-set.
Max2SatCcInstance to_max2sat_cc(const WeightedGraph& g, int k);

/// Total weight of clauses with at least one true literal.
double satisfied_weight(const Max2SatCcInstance& inst, const std::vector<bool>& assignment);

/// Weighted-DIMACS-style text: header `p wcnf-cc <vars> <clauses> <k>`,
/// then `<weight> <lit> [<lit>] 0` per clause with 1-based literals.
std::string write_wcnf_cc(const Max2SatCcInstance& inst);
Max2SatCcInstance parse_wcnf_cc(std::string_view text);

struct LocalSearchParams {
    int restarts = 50;
    int non_improving_factor = 10;  // budget per restart: factor * num_vars steps
    uint64_t seed = 1;
};

/// Restart-based swap local search. The returned assignment always has
/// exactly `cardinality` true variables. No approximation ratio is claimed.
std::vector<bool> local_search_max2sat_cc(const Max2SatCcInstance& inst,
                                          const LocalSearchParams& params = {});

}  // namespace kvc
