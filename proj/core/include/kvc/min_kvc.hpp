#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "kvc/coloring.hpp"
#include "kvc/graph.hpp"

namespace kvc {

/// Representative family over elements 0..l-1 carrying non-negative values:
/// a set T of size j is a member iff T lies inside the j * ceil(1/delta)
/// highest-valued elements. Any subset of the universe can be shrunk to a
/// member while discarding at most delta * (total value). The empty set is
/// always a member.
class RepFamily {
public:
    RepFamily(std::vector<double> values, double delta, int max_size);

    int universe_size() const { return static_cast<int>(values_.size()); }
    int max_size() const { return max_size_; }
    double delta() const { return delta_; }
    double total_value() const { return total_; }

    /// Elements sorted by value descending, ties by ascending id.
    const std::vector<int>& order() const { return order_; }

    /// min{j * ceil(1/delta), l}: members of size j live inside this prefix.
    int prefix_size(int j) const;

    bool is_member(std::span<const int> elements) const;

    /// Invokes f(std::span<const int> element_ids) for every member of size j,
    /// in lexicographic order over the value ranks.
    template <typename F>
    void for_each_member(int j, F&& f) const;

    /// Count of members of size j: C(prefix_size(j), j).
    uint64_t member_count(int j) const;

    /// Representative of `subset` per the proof of the covering property:
    /// ranks i_1 < ... < i_m of the subset, t the largest index with
    /// i_t <= t * ceil(1/delta), T the t lowest-ranked elements. Guarantees
    /// T member, T subset of input, discarded value <= delta * total_value().
    std::vector<int> pick(std::span<const int> subset) const;

private:
    std::vector<double> values_;
    double delta_ = 0.0;
    int max_size_ = 0;
    int inv_delta_ceil_ = 0;
    double total_ = 0.0;
    std::vector<int> order_;  // rank -> element id
    std::vector<int> rank_;   // element id -> 1-based rank
};

/// Free-function aliases of the RepFamily constructor and picker.
RepFamily rep_family_build(std::span<const double> values, double delta, int max_size);
std::vector<int> rep_pick(const RepFamily& family, std::span<const int> subset);

/// DP table over color subsets of [k]. Entry values only decrease; unreached
/// entries hold +infinity. Leaf entries remember the witness set that
/// produced them; combined entries remember their split for reconstruction.
class DpTable {
public:
    explicit DpTable(int num_colors);

    int num_colors() const { return num_colors_; }
    uint32_t full_mask() const { return mask_count_ - 1; }
    double value(uint32_t mask) const { return values_[mask]; }
    bool is_infinite(uint32_t mask) const {
        return values_[mask] == std::numeric_limits<double>::infinity();
    }

    /// Min-merge of a leaf entry; returns true when the entry improved.
    bool relax_leaf(uint32_t mask, double value, std::span<const int> witness);

    /// Witness set for a finite entry (follows stored splits).
    std::vector<int> reconstruct(uint32_t mask) const;

    /// Relaxes every entry by the best split into two disjoint color subsets;
    /// realizes the min over partitions of the leaf table.
    friend void dp_combine(DpTable& dp);

private:
    int num_colors_ = 0;
    uint32_t mask_count_ = 0;
    std::vector<double> values_;
    std::vector<std::vector<int>> leaf_witness_;
    std::vector<uint32_t> split_;  // 0 = leaf entry
};

void dp_combine(DpTable& dp);

struct SubgraphGenStats {
    uint64_t leaves = 0;
    uint64_t calls = 0;
    uint64_t max_leaves_per_start = 0;
};

/// One recursive subgraph-generation pass (Algorithm 1): deactivates the
/// lowest active vertex, branches on the representative family over its
/// incident weights at delta = epsilon/2, and records covered weights of the
/// generated colorful sets into dp.
void subgraph_gen(const WeightedGraph& g, int k, const Coloring& chi, const VertexSet& active,
                  const VertexSet& included, double epsilon, DpTable& dp,
                  SubgraphGenStats* stats = nullptr);

/// Runs subgraph_gen from every start vertex; the result is the DP* table.
DpTable build_dp_star(const WeightedGraph& g, int k, const Coloring& chi, double epsilon,
                      SubgraphGenStats* stats = nullptr);

/// (1 + epsilon)-approximation for Multicolored Min k-VC in
/// O(1/eps)^{O(k)} * poly(n) time; nullopt when no colorful k-set exists.
/// The returned value lies in [optmin, (1 + epsilon) * optmin]; the witness
/// is a colorful k-set whose covered weight is at most that value.
std::optional<Solution> multicolored_min_kvc(const WeightedGraph& g, int k, const Coloring& chi,
                                             double epsilon, SubgraphGenStats* stats = nullptr);

/// Trial count making a uniform coloring hit any fixed k-set colorfully with
/// probability >= 1 - p_fail: ceil(e^k * ln(1/p_fail)).
int auto_trial_count(int k, double p_fail);

struct MinKvcOptions {
    double epsilon = 0.5;
    int trials = 0;  // 0 = auto_trial_count(k, p_fail)
    double p_fail = 1e-3;
    uint64_t seed = 1;
};

/// Color-coding FPT-AS for (uncolored) Min k-VC: best multicolored answer
/// over random colorings plus a deterministic round-robin baseline coloring.
/// The value is always >= optmin; it is <= (1 + epsilon) * optmin with
/// probability >= 1 - p_fail over the random colorings.
Solution min_kvc_fptas(const WeightedGraph& g, int k, const MinKvcOptions& options,
                       SubgraphGenStats* stats = nullptr);

/// Baseline: the k vertices of smallest weighted degree (ties to lowest id).
/// 2-approximation on unweighted simple graphs.
Solution greedy_min(const WeightedGraph& g, int k);

// --- template implementation ---

template <typename F>
void RepFamily::for_each_member(int j, F&& f) const {
    if (j == 0) {
        f(std::span<const int>{});
        return;
    }
    int limit = prefix_size(j);
    if (j > limit) return;
    std::vector<int> ranks(j);   // 0-based indices into order_
    std::vector<int> member(j);  // element ids, ordered by rank
    for (int i = 0; i < j; ++i) ranks[i] = i;
    while (true) {
        for (int i = 0; i < j; ++i) member[i] = order_[ranks[i]];
        f(std::span<const int>(member));
        int i = j - 1;
        while (i >= 0 && ranks[i] == limit - j + i) --i;
        if (i < 0) break;
        ++ranks[i];
        for (int t = i + 1; t < j; ++t) ranks[t] = ranks[t - 1] + 1;
    }
}

}  // namespace kvc
