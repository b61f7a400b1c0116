#pragma once

#include <optional>
#include <span>

#include "kvc/coloring.hpp"
#include "kvc/graph.hpp"

namespace kvc {

/// Exact Max k-VC by exhaustive enumeration of all k-subsets.
/// Among maximizers, returns the lexicographically smallest member list.
/// Intended for desk scale (n <= ~20, k <= ~5).
Solution brute_max_kvc(const WeightedGraph& g, int k);

/// Exact Min k-VC, same contract with min.
Solution brute_min_kvc(const WeightedGraph& g, int k);

/// Exact Multicolored Min k-VC over colorful k-sets; nullopt when no
/// colorful k-set exists.
std::optional<Solution> brute_multicolored_min_kvc(const WeightedGraph& g, int k,
                                                   const Coloring& chi);

/// Exhaustive scan over the k-subsets of `candidates` (distinct vertex ids),
/// evaluating coverage in g. Shared by the oracles and the degree-restricted
/// FPT-AS. Candidates are scanned in ascending id order so ties resolve to
/// the lexicographically smallest set.
Solution best_k_subset(const WeightedGraph& g, std::span<const int> candidates, int k,
                       bool maximize);

}  // namespace kvc
