#pragma once

#include <functional>
#include <vector>

#include "kvc/graph.hpp"
#include "kvc/two_sat.hpp"

namespace kvc {

/// Output of a reduction algorithm: the reduced instance plus everything the
/// solution-lifting map needs.
struct KernelResult {
    static constexpr int kPaddedVertex = -1;

    WeightedGraph reduced;
    int k = 0;                  // original cardinality budget
    int original_n = 0;
    std::vector<int> id_map;    // reduced id -> original id; kPaddedVertex for padded
    VertexSet committed;        // original ids forced into any lifted solution
    double epsilon = 0.0;

    /// Cardinality left for the reduced instance after commitments.
    int residual_k() const { return k - committed.size(); }
};

/// n' = min{k + ceil(k / epsilon), n}: prefix length of the degree order that
/// is guaranteed to contain a (1 - epsilon)-approximate solution.
int fptas_prefix_size(int n, int k, double epsilon);

/// (1 - epsilon)-approximation for Max k-VC: brute force over the k-subsets
/// of the n' highest-weighted-degree vertices. Runs in O(1/eps)^k * poly(n).
Solution fptas_max(const WeightedGraph& g, int k, double epsilon);

/// (1 - epsilon)-approximate kernel with at most k + ceil(k/epsilon) vertices:
/// induced subgraph on the degree-order prefix, with each kept vertex's
/// self-loop weight raised by its edge weight to the discarded vertices.
/// Coverage inside the kernel equals coverage in the original graph exactly.
KernelResult kernel_weighted(const WeightedGraph& g, int k, double epsilon);

/// Approximate kernel for unweighted simple graphs that is itself unweighted
/// and simple. High-degree vertices are committed greedily first; boundary
/// edges of the kept prefix are then rerouted to padded vertices of balanced
/// degree. The internal construction runs at epsilon/2 so the exported
/// guarantee stays (1 - epsilon).
KernelResult kernel_unweighted(const WeightedGraph& g, int k, double epsilon);

/// Maps a reduced-instance solution back to the original graph: drops padded
/// vertices, applies the id map, adds committed vertices, and pads with the
/// lowest unused original ids up to size k.
VertexSet lift_solution(const KernelResult& kr, const VertexSet& reduced_solution);

/// (1 - 1/e)-approximation: k rounds of maximum marginal coverage gain,
/// ties to the lowest id.
Solution greedy_max(const WeightedGraph& g, int k);

/// Pluggable 2SAT-CC solver: must return an assignment with exactly
/// `cardinality` true variables.
using TwoSatCcSolver = std::function<std::vector<bool>(const Max2SatCcInstance&)>;

/// kernel_weighted -> to_max2sat_cc -> solver -> lift. The pipeline's ratio is
/// (1 - epsilon) * beta where beta is the plugged solver's ratio; the default
/// local search claims no ratio.
Solution solve_via_2sat_pipeline(const WeightedGraph& g, int k, double epsilon,
                                 const TwoSatCcSolver& solver);

/// Pipeline with the built-in local search (fixed seed for reproducibility).
Solution solve_via_2sat_pipeline(const WeightedGraph& g, int k, double epsilon,
                                 uint64_t seed = 1);

}  // namespace kvc
