#include "kvc/oracle.hpp"

#include <algorithm>

namespace kvc {

namespace {

// Lexicographic scan over k-subsets of a sorted candidate list with the
// covered weight maintained incrementally. The running value is restored
// from a saved copy on backtrack, so no float drift accumulates.
class SubsetScanner {
public:
    SubsetScanner(const WeightedGraph& g, std::span<const int> candidates, int k, bool maximize,
                  const Coloring* chi)
        : g_(g), cand_(candidates), k_(k), maximize_(maximize), chi_(chi),
          in_set_(g.num_vertices(), 0) {
        current_.reserve(k);
    }

    std::optional<Solution> run() {
        recurse(0, k_);
        if (!found_) return std::nullopt;
        // Canonical recomputation so equal winning sets produce bit-identical
        // values regardless of the enumeration path.
        VertexSet set(best_set_);
        return Solution{set, covered_weight(g_, set)};
    }

private:
    void recurse(size_t idx, int remaining) {
        if (remaining == 0) {
            leaf();
            return;
        }
        if (cand_.size() - idx < static_cast<size_t>(remaining)) return;
        int v = cand_[idx];
        uint32_t bit = chi_ ? chi_->color_bit(v) : 0;
        if (!chi_ || !(color_mask_ & bit)) {
            double saved = covered_;
            covered_ += add_vertex(v);
            current_.push_back(v);
            color_mask_ |= bit;
            recurse(idx + 1, remaining - 1);
            color_mask_ &= ~bit;
            current_.pop_back();
            in_set_[v] = 0;
            covered_ = saved;
        }
        recurse(idx + 1, remaining);
    }

    double add_vertex(int v) {
        double delta = 0.0;
        for (const auto& [other, w] : g_.neighbors(v))
            if (other == v || !in_set_[other]) delta += w;
        in_set_[v] = 1;
        return delta;
    }

    void leaf() {
        bool better = !found_ || (maximize_ ? covered_ > best_value_ : covered_ < best_value_);
        if (better) {
            found_ = true;
            best_value_ = covered_;
            best_set_ = current_;
        }
    }

    const WeightedGraph& g_;
    std::span<const int> cand_;
    int k_;
    bool maximize_;
    const Coloring* chi_;
    std::vector<char> in_set_;
    std::vector<int> current_;
    double covered_ = 0.0;
    uint32_t color_mask_ = 0;
    bool found_ = false;
    double best_value_ = 0.0;
    std::vector<int> best_set_;
};

std::vector<int> all_vertices(const WeightedGraph& g) {
    std::vector<int> ids(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) ids[v] = v;
    return ids;
}

void check_k(const WeightedGraph& g, int k) {
    if (k < 0 || k > g.num_vertices())
        throw InvalidK("k = " + std::to_string(k) + " outside [0, n = " +
                       std::to_string(g.num_vertices()) + "]");
}

}  // namespace

Solution best_k_subset(const WeightedGraph& g, std::span<const int> candidates, int k,
                       bool maximize) {
    if (k < 0 || static_cast<size_t>(k) > candidates.size())
        throw InvalidK("k = " + std::to_string(k) + " exceeds candidate count " +
                       std::to_string(candidates.size()));
    std::vector<int> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) g.check_vertex(v);
    auto best = SubsetScanner(g, sorted, k, maximize, nullptr).run();
    KVC_ASSERT(best.has_value());
    return *best;
}

Solution brute_max_kvc(const WeightedGraph& g, int k) {
    check_k(g, k);
    auto ids = all_vertices(g);
    auto best = SubsetScanner(g, ids, k, /*maximize=*/true, nullptr).run();
    KVC_ASSERT(best.has_value());
    return *best;
}

Solution brute_min_kvc(const WeightedGraph& g, int k) {
    check_k(g, k);
    auto ids = all_vertices(g);
    auto best = SubsetScanner(g, ids, k, /*maximize=*/false, nullptr).run();
    KVC_ASSERT(best.has_value());
    return *best;
}

std::optional<Solution> brute_multicolored_min_kvc(const WeightedGraph& g, int k,
                                                   const Coloring& chi) {
    check_k(g, k);
    if (k == 0) return Solution{};
    if (chi.size() != g.num_vertices())
        throw InvalidColoring("coloring has " + std::to_string(chi.size()) +
                              " entries for a graph with n = " + std::to_string(g.num_vertices()));
    if (chi.num_colors() != k)
        throw InvalidColoring("coloring uses " + std::to_string(chi.num_colors()) +
                              " colors, expected k = " + std::to_string(k));
    auto ids = all_vertices(g);
    return SubsetScanner(g, ids, k, /*maximize=*/false, &chi).run();
}

}  // namespace kvc
