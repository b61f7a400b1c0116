#include "kvc/min_kvc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <set>

#include "kvc/util.hpp"

namespace kvc {

namespace {

void check_k(const WeightedGraph& g, int k) {
    if (k < 0 || k > g.num_vertices())
        throw InvalidK("k = " + std::to_string(k) + " outside [0, n = " +
                       std::to_string(g.num_vertices()) + "]");
}

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || std::isnan(epsilon) || std::isinf(epsilon))
        throw InvalidEpsilon("epsilon must be a positive finite real");
}

void check_coloring(const WeightedGraph& g, int k, const Coloring& chi) {
    if (chi.size() != g.num_vertices())
        throw InvalidColoring("coloring has " + std::to_string(chi.size()) +
                              " entries for a graph with n = " + std::to_string(g.num_vertices()));
    if (chi.num_colors() != k)
        throw InvalidColoring("coloring uses " + std::to_string(chi.num_colors()) +
                              " colors, expected k = " + std::to_string(k));
}

constexpr int kMaxDpColors = 25;  // 2^k table entries; desk-scale guard

}  // namespace

RepFamily::RepFamily(std::vector<double> values, double delta, int max_size)
    : values_(std::move(values)), delta_(delta), max_size_(max_size) {
    if (!(delta > 0.0) || std::isnan(delta)) throw InvalidDelta("delta must be positive");
    if (max_size_ < 0 || max_size_ > universe_size())
        throw InvalidParams("max_size outside [0, universe size]");
    for (double v : values_)
        if (!(v >= 0.0)) throw InvalidParams("element values must be non-negative");
    inv_delta_ceil_ = ceil_ratio(1, delta);
    order_.resize(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) order_[i] = static_cast<int>(i);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
        return values_[a] != values_[b] ? values_[a] > values_[b] : a < b;
    });
    rank_.resize(values_.size());
    for (size_t pos = 0; pos < order_.size(); ++pos) rank_[order_[pos]] = static_cast<int>(pos) + 1;
    for (double v : values_) total_ += v;
}

int RepFamily::prefix_size(int j) const {
    long long limit = static_cast<long long>(j) * inv_delta_ceil_;
    return static_cast<int>(std::min<long long>(limit, universe_size()));
}

bool RepFamily::is_member(std::span<const int> elements) const {
    int j = static_cast<int>(elements.size());
    int limit = prefix_size(j);
    std::vector<int> seen(elements.begin(), elements.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (int e : elements) {
        if (e < 0 || e >= universe_size()) return false;
        if (rank_[e] > limit) return false;
    }
    return true;
}

uint64_t RepFamily::member_count(int j) const {
    if (j == 0) return 1;
    int limit = prefix_size(j);
    if (j > limit) return 0;
    uint64_t count = 1;
    for (int i = 1; i <= j; ++i) count = count * (limit - j + i) / i;
    return count;
}

std::vector<int> RepFamily::pick(std::span<const int> subset) const {
    std::vector<int> ranks;
    ranks.reserve(subset.size());
    for (int e : subset) {
        KVC_ASSERT(e >= 0 && e < universe_size());
        ranks.push_back(rank_[e]);
    }
    std::sort(ranks.begin(), ranks.end());
    KVC_ASSERT(std::adjacent_find(ranks.begin(), ranks.end()) == ranks.end());
    int t = static_cast<int>(ranks.size());
    while (t > 0 && ranks[t - 1] > static_cast<long long>(t) * inv_delta_ceil_) --t;
    std::vector<int> picked;
    picked.reserve(t);
    for (int i = 0; i < t; ++i) picked.push_back(order_[ranks[i] - 1]);
    std::sort(picked.begin(), picked.end());
    return picked;
}

RepFamily rep_family_build(std::span<const double> values, double delta, int max_size) {
    return RepFamily(std::vector<double>(values.begin(), values.end()), delta, max_size);
}

std::vector<int> rep_pick(const RepFamily& family, std::span<const int> subset) {
    return family.pick(subset);
}

DpTable::DpTable(int num_colors) : num_colors_(num_colors) {
    if (num_colors < 0 || num_colors > kMaxDpColors)
        throw InvalidK("color count " + std::to_string(num_colors) + " outside [0, " +
                       std::to_string(kMaxDpColors) + "]");
    mask_count_ = 1u << num_colors_;
    values_.assign(mask_count_, std::numeric_limits<double>::infinity());
    values_[0] = 0.0;
    leaf_witness_.resize(mask_count_);
    split_.assign(mask_count_, 0);
}

bool DpTable::relax_leaf(uint32_t mask, double value, std::span<const int> witness) {
    KVC_ASSERT(mask < mask_count_);
    if (value < values_[mask]) {
        values_[mask] = value;
        leaf_witness_[mask].assign(witness.begin(), witness.end());
        split_[mask] = 0;
        return true;
    }
    return false;
}

std::vector<int> DpTable::reconstruct(uint32_t mask) const {
    KVC_ASSERT(mask < mask_count_);
    if (mask == 0) return {};
    if (is_infinite(mask)) throw Error("no witness for an unreachable color subset");
    if (split_[mask] == 0) return leaf_witness_[mask];
    auto left = reconstruct(split_[mask]);
    auto right = reconstruct(mask ^ split_[mask]);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

void dp_combine(DpTable& dp) {
    uint32_t full = dp.full_mask();
    for (int size = 2; size <= dp.num_colors_; ++size) {
        for (uint32_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != size) continue;
            for (uint32_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
                double candidate = dp.values_[sub] + dp.values_[mask ^ sub];
                if (candidate < dp.values_[mask]) {
                    dp.values_[mask] = candidate;
                    dp.split_[mask] = sub;
                }
            }
        }
    }
}

namespace {

// Recursion state for Algorithm 1. Representative families are cached per
// deactivated vertex; the covered weight is maintained incrementally and
// restored from saved copies on backtrack.
class SubgraphGenRun {
public:
    SubgraphGenRun(const WeightedGraph& g, int k, const Coloring& chi, double epsilon, DpTable& dp,
                   SubgraphGenStats* stats)
        : g_(g), k_(k), chi_(chi), delta_(epsilon / 2.0), dp_(dp), stats_(stats),
          in_included_(g.num_vertices(), 0), families_(g.num_vertices()) {}

    void run_from_start(int u) {
        double saved = covered_;
        covered_ += add_vertex(u);
        included_.push_back(u);
        active_.insert(u);
        color_mask_ |= chi_.color_bit(u);
        recurse();
        color_mask_ &= ~chi_.color_bit(u);
        active_.erase(u);
        included_.pop_back();
        in_included_[u] = 0;
        covered_ = saved;
    }

    void run_from_state(const VertexSet& active, const VertexSet& included) {
        KVC_ASSERT(included.size() <= k_);
        KVC_ASSERT(chi_.is_colorful(included));
        for (int v : active) KVC_ASSERT(included.contains(v));
        for (int v : included) {
            g_.check_vertex(v);
            covered_ += add_vertex(v);
            included_.push_back(v);
            color_mask_ |= chi_.color_bit(v);
        }
        for (int v : active) active_.insert(v);
        recurse();
        active_.clear();
        for (int v : included) in_included_[v] = 0;
        included_.clear();
        color_mask_ = 0;
        covered_ = 0.0;
    }

private:
    const RepFamily& family(int u) {
        if (!families_[u]) {
            std::vector<double> values(std::max(0, g_.num_vertices() - 1), 0.0);
            for (const auto& [other, w] : g_.neighbors(u))
                if (other != u) values[other < u ? other : other - 1] = w;
            int max_size = std::min<int>(std::max(0, k_ - 1), static_cast<int>(values.size()));
            families_[u] = std::make_unique<RepFamily>(std::move(values), delta_, max_size);
        }
        return *families_[u];
    }

    double add_vertex(int v) {
        double delta = 0.0;
        for (const auto& [other, w] : g_.neighbors(v))
            if (other == v || !in_included_[other]) delta += w;
        in_included_[v] = 1;
        return delta;
    }

    void recurse() {
        if (stats_) ++stats_->calls;
        if (active_.empty()) {
            if (stats_) ++stats_->leaves;
            dp_.relax_leaf(color_mask_, covered_, included_);
            return;
        }
        int u = *active_.begin();
        active_.erase(active_.begin());
        const RepFamily& fam = family(u);
        int room = k_ - static_cast<int>(included_.size());
        int max_j = std::min(room, fam.universe_size());
        for (int j = 0; j <= max_j; ++j) {
            fam.for_each_member(j, [&](std::span<const int> elements) {
                branch(u, elements);
            });
        }
        active_.insert(u);
    }

    void branch(int u, std::span<const int> elements) {
        uint32_t add_mask = 0;
        for (int e : elements) {
            int v = e < u ? e : e + 1;
            if (in_included_[v]) return;
            uint32_t bit = chi_.color_bit(v);
            if ((color_mask_ | add_mask) & bit) return;
            add_mask |= bit;
        }
        double saved = covered_;
        size_t included_before = included_.size();
        for (int e : elements) {
            int v = e < u ? e : e + 1;
            covered_ += add_vertex(v);
            included_.push_back(v);
            active_.insert(v);
        }
        color_mask_ |= add_mask;
        recurse();
        color_mask_ &= ~add_mask;
        while (included_.size() > included_before) {
            int v = included_.back();
            included_.pop_back();
            active_.erase(v);
            in_included_[v] = 0;
        }
        covered_ = saved;
    }

    const WeightedGraph& g_;
    int k_;
    const Coloring& chi_;
    double delta_;
    DpTable& dp_;
    SubgraphGenStats* stats_;
    std::vector<char> in_included_;
    std::vector<int> included_;
    std::set<int> active_;
    uint32_t color_mask_ = 0;
    double covered_ = 0.0;
    std::vector<std::unique_ptr<RepFamily>> families_;
};

}  // namespace

void subgraph_gen(const WeightedGraph& g, int k, const Coloring& chi, const VertexSet& active,
                  const VertexSet& included, double epsilon, DpTable& dp,
                  SubgraphGenStats* stats) {
    KVC_ASSERT(k >= 0 && k <= g.num_vertices());
    KVC_ASSERT(epsilon > 0.0);
    KVC_ASSERT(chi.size() == g.num_vertices());
    SubgraphGenRun run(g, k, chi, epsilon, dp, stats);
    run.run_from_state(active, included);
}

DpTable build_dp_star(const WeightedGraph& g, int k, const Coloring& chi, double epsilon,
                      SubgraphGenStats* stats) {
    check_k(g, k);
    check_epsilon(epsilon);
    check_coloring(g, k, chi);
    DpTable dp(k);
    SubgraphGenRun run(g, k, chi, epsilon, dp, stats);
    for (int u = 0; u < g.num_vertices(); ++u) {
        uint64_t before = stats ? stats->leaves : 0;
        run.run_from_start(u);
        if (stats)
            stats->max_leaves_per_start = std::max(stats->max_leaves_per_start,
                                                   stats->leaves - before);
    }
    return dp;
}

std::optional<Solution> multicolored_min_kvc(const WeightedGraph& g, int k, const Coloring& chi,
                                             double epsilon, SubgraphGenStats* stats) {
    check_k(g, k);
    check_epsilon(epsilon);
    if (k == 0) return Solution{};
    check_coloring(g, k, chi);
    DpTable dp = build_dp_star(g, k, chi, epsilon, stats);
    dp_combine(dp);
    if (dp.is_infinite(dp.full_mask())) return std::nullopt;
    VertexSet witness(dp.reconstruct(dp.full_mask()));
    KVC_ASSERT(witness.size() == k);
    return Solution{witness, dp.value(dp.full_mask())};
}

int auto_trial_count(int k, double p_fail) {
    if (!(p_fail > 0.0) || !(p_fail < 1.0))
        throw InvalidParams("p_fail must lie in (0, 1)");
    if (k < 0) throw InvalidK("k must be non-negative");
    if (k == 0) return 1;
    double want = std::ceil(std::exp(k) * std::log(1.0 / p_fail) - 1e-9);
    if (want > 1e9)
        throw InvalidParams("auto trial count is impractically large; pass trials explicitly");
    return std::max(1, static_cast<int>(want));
}

Solution min_kvc_fptas(const WeightedGraph& g, int k, const MinKvcOptions& options,
                       SubgraphGenStats* stats) {
    check_k(g, k);
    check_epsilon(options.epsilon);
    if (options.trials < 0) throw InvalidParams("trials must be non-negative");
    if (k == 0) return {};
    int trials = options.trials > 0 ? options.trials : auto_trial_count(k, options.p_fail);

    // Deterministic round-robin baseline first: guarantees a feasible answer
    // for every trial budget and makes the result monotone in `trials`.
    auto baseline = multicolored_min_kvc(g, k, Coloring::round_robin(g.num_vertices(), k),
                                         options.epsilon, stats);
    KVC_ASSERT(baseline.has_value());
    Solution best = *baseline;

    Rng rng(options.seed);
    for (int t = 0; t < trials; ++t) {
        Coloring chi = Coloring::uniform_random(g.num_vertices(), k, rng);
        auto result = multicolored_min_kvc(g, k, chi, options.epsilon, stats);
        if (result && result->value < best.value) best = *result;
    }
    return best;
}

Solution greedy_min(const WeightedGraph& g, int k) {
    check_k(g, k);
    std::vector<int> order(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.wdeg(a) != g.wdeg(b) ? g.wdeg(a) < g.wdeg(b) : a < b;
    });
    order.resize(k);
    VertexSet set(std::move(order));
    return {set, covered_weight(g, set)};
}

}  // namespace kvc
