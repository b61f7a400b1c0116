#include "kvc/graph.hpp"

#include <algorithm>
#include <cmath>

namespace kvc {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw InvalidVertex("vertex set contains duplicate ids");
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(members_[i]);
    }
    out += "}";
    return out;
}

WeightedGraph::WeightedGraph(int n, std::vector<WeightedEdge> edges) : n_(n) {
    if (n < 0) throw InvalidParams("vertex count must be non-negative");
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw InvalidVertex("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                                std::to_string(e.v) + ") with n = " + std::to_string(n));
        if (!(e.weight >= 0.0) || std::isnan(e.weight))
            throw InvalidWeight("edge weight must be non-negative and finite");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return a.u != b.u ? a.u < b.u : a.v < b.v;
              });
    // Merge repeated pairs by summing their weights.
    for (const auto& e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
            edges_.back().weight += e.weight;
        else
            edges_.push_back(e);
    }

    wdeg_.assign(n_, 0.0);
    loop_weight_.assign(n_, 0.0);
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_) {
        total_weight_ += e.weight;
        wdeg_[e.u] += e.weight;
        deg[e.u]++;
        if (e.u != e.v) {
            wdeg_[e.v] += e.weight;
            deg[e.v]++;
        } else {
            loop_weight_[e.u] += e.weight;
            total_loop_weight_ += e.weight;
        }
    }
    adj_offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
    adj_.resize(adj_offsets_[n_]);
    std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const auto& e : edges_) {
        adj_[cursor[e.u]++] = {e.v, e.weight};
        if (e.u != e.v) adj_[cursor[e.v]++] = {e.u, e.weight};
    }
}

void WeightedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidVertex("vertex id " + std::to_string(v) + " out of range for n = " +
                            std::to_string(n_));
}

std::span<const std::pair<int, double>> WeightedGraph::neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + adj_offsets_[v],
            static_cast<size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

double WeightedGraph::wdeg(int v) const {
    check_vertex(v);
    return wdeg_[v];
}

double WeightedGraph::loop_weight(int v) const {
    check_vertex(v);
    return loop_weight_[v];
}

bool WeightedGraph::is_unweighted_simple() const {
    for (const auto& e : edges_)
        if (e.u == e.v || e.weight != 1.0) return false;
    return true;
}

namespace {

std::vector<char> membership_mask(const WeightedGraph& g, const VertexSet& s) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : s) {
        g.check_vertex(v);
        in[v] = 1;
    }
    return in;
}

}  // namespace

double covered_weight(const WeightedGraph& g, const VertexSet& s) {
    auto in = membership_mask(g, s);
    double total = 0.0;
    for (const auto& e : g.edges())
        if (in[e.u] || in[e.v]) total += e.weight;
    return total;
}

double cross_weight(const WeightedGraph& g, const VertexSet& s, const VertexSet& t) {
    auto in_s = membership_mask(g, s);
    auto in_t = membership_mask(g, t);
    double total = 0.0;
    for (const auto& e : g.edges())
        if ((in_s[e.u] || in_s[e.v]) && (in_t[e.u] || in_t[e.v])) total += e.weight;
    return total;
}

double wdeg_set(const WeightedGraph& g, const VertexSet& s) {
    double total = 0.0;
    for (int v : s) total += g.wdeg(v);
    return total;
}

std::vector<int> degree_order(const WeightedGraph& g) {
    std::vector<int> order(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.wdeg(a) != g.wdeg(b)) return g.wdeg(a) > g.wdeg(b);
        return a < b;
    });
    return order;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& keep) {
    std::vector<int> new_id(g.num_vertices(), -1);
    std::vector<int> to_original;
    to_original.reserve(keep.size());
    for (int v : keep) {
        g.check_vertex(v);
        new_id[v] = static_cast<int>(to_original.size());
        to_original.push_back(v);
    }
    std::vector<WeightedEdge> edges;
    for (const auto& e : g.edges())
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
            edges.push_back({new_id[e.u], new_id[e.v], e.weight});
    return {WeightedGraph(keep.size(), std::move(edges)), std::move(to_original)};
}

}  // namespace kvc
