#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kvc/errors.hpp"

namespace kvc {

/// Undirected edge with a non-negative weight; u == v denotes a self-loop.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
};

/// Canonical vertex subset: strictly increasing member list.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts the members; duplicates are rejected.
    explicit VertexSet(std::vector<int> members);
    VertexSet(std::initializer_list<int> members)
        : VertexSet(std::vector<int>(members)) {}

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;
    const std::vector<int>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet&) const = default;

    std::string to_string() const;

private:
    std::vector<int> members_;
};

/// Edge-weighted undirected graph on vertices 0..n-1, self-loops allowed.
/// Immutable after construction; duplicate input pairs are merged by summing
/// their weights. All query methods are const and safe to call concurrently.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n, std::vector<WeightedEdge> edges = {});

    int num_vertices() const { return n_; }
    /// Canonical edge list: u <= v, sorted by (u, v), one entry per pair.
    const std::vector<WeightedEdge>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    /// Incident (neighbor, weight) pairs of v; a self-loop appears once as (v, w).
    std::span<const std::pair<int, double>> neighbors(int v) const;

    /// Weighted degree: sum of incident edge weights, self-loop counted once.
    double wdeg(int v) const;
    double loop_weight(int v) const;

    double total_weight() const { return total_weight_; }
    double total_loop_weight() const { return total_loop_weight_; }

    /// True when every weight is exactly 1 and there are no self-loops.
    bool is_unweighted_simple() const;

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<WeightedEdge> edges_;
    std::vector<double> wdeg_;
    std::vector<double> loop_weight_;
    std::vector<int> adj_offsets_;
    std::vector<std::pair<int, double>> adj_;
    double total_weight_ = 0.0;
    double total_loop_weight_ = 0.0;
};

/// A (solution set, objective value) pair.
struct Solution {
    VertexSet set;
    double value = 0.0;
};

/// Total weight of edges with at least one endpoint in s.
double covered_weight(const WeightedGraph& g, const VertexSet& s);

/// Total weight of edges touching both s and t.
double cross_weight(const WeightedGraph& g, const VertexSet& s, const VertexSet& t);

/// Sum of weighted degrees over the members of s.
double wdeg_set(const WeightedGraph& g, const VertexSet& s);

/// Vertex ids sorted by weighted degree descending, ties by ascending id.
std::vector<int> degree_order(const WeightedGraph& g);

struct InducedSubgraph {
    WeightedGraph graph;
    std::vector<int> to_original;  // new id -> old id, ascending in old id
};

/// Subgraph on `keep`, retaining exactly the edges (loops included) with both
/// endpoints kept. New ids follow the ascending order of the old ids.
InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& keep);

}  // namespace kvc
