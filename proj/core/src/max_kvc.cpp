#include "kvc/max_kvc.hpp"

#include <algorithm>
#include <cmath>

#include "kvc/oracle.hpp"
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

}  // namespace

int fptas_prefix_size(int n, int k, double epsilon) {
    check_epsilon(epsilon);
    if (k < 0) throw InvalidK("k must be non-negative");
    long long prefix = static_cast<long long>(k) + ceil_ratio(k, epsilon);
    return static_cast<int>(std::min<long long>(prefix, n));
}

Solution fptas_max(const WeightedGraph& g, int k, double epsilon) {
    check_k(g, k);
    check_epsilon(epsilon);
    int prefix = fptas_prefix_size(g.num_vertices(), k, epsilon);
    auto order = degree_order(g);
    order.resize(prefix);
    return best_k_subset(g, order, k, /*maximize=*/true);
}

KernelResult kernel_weighted(const WeightedGraph& g, int k, double epsilon) {
    check_k(g, k);
    check_epsilon(epsilon);
    int prefix = fptas_prefix_size(g.num_vertices(), k, epsilon);
    auto order = degree_order(g);

    std::vector<int> kept(order.begin(), order.begin() + prefix);
    std::vector<int> reduced_id(g.num_vertices(), -1);
    for (int i = 0; i < prefix; ++i) reduced_id[kept[i]] = i;

    std::vector<WeightedEdge> edges;
    std::vector<double> boundary(prefix, 0.0);  // folded into self-loops below
    for (const auto& e : g.edges()) {
        int ru = reduced_id[e.u], rv = reduced_id[e.v];
        if (ru >= 0 && rv >= 0) {
            edges.push_back({ru, rv, e.weight});
        } else if (ru >= 0) {
            boundary[ru] += e.weight;
        } else if (rv >= 0) {
            boundary[rv] += e.weight;
        }
    }
    for (int i = 0; i < prefix; ++i)
        if (boundary[i] > 0.0) edges.push_back({i, i, boundary[i]});

    KernelResult kr;
    kr.reduced = WeightedGraph(prefix, std::move(edges));
    kr.k = k;
    kr.original_n = g.num_vertices();
    kr.id_map = std::move(kept);
    kr.epsilon = epsilon;
    return kr;
}

KernelResult kernel_unweighted(const WeightedGraph& g, int k, double epsilon) {
    check_k(g, k);
    check_epsilon(epsilon);
    if (epsilon > 1.0) throw InvalidEpsilon("unweighted kernel requires epsilon in (0, 1]");
    if (!g.is_unweighted_simple())
        throw NotUnweighted("unweighted kernel requires an unweighted simple graph");

    int n = g.num_vertices();
    std::vector<char> removed(n, 0);
    std::vector<int> degree(n, 0);
    for (const auto& e : g.edges()) {
        ++degree[e.u];
        ++degree[e.v];
    }

    // Stage 1: while the current maximum degree reaches ceil(k/eps), that
    // vertex can always be taken; commit it, delete it, decrement k.
    std::vector<int> committed;
    int k_cur = k;
    while (k_cur > 0) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || degree[v] > degree[best])) best = v;
        if (best < 0 || degree[best] < ceil_ratio(k_cur, epsilon)) break;
        committed.push_back(best);
        removed[best] = 1;
        --k_cur;
        for (const auto& [other, w] : g.neighbors(best)) {
            (void)w;
            if (!removed[other]) --degree[other];
        }
        degree[best] = 0;
    }

    // Stage 2 runs the padded construction at delta = eps/2 so the combined
    // loss stays within (1 - eps).
    double delta = epsilon / 2.0;
    std::vector<int> remaining;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) remaining.push_back(v);
    std::sort(remaining.begin(), remaining.end(), [&](int a, int b) {
        return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
    });

    int n_res = static_cast<int>(remaining.size());
    long long want = k_cur == 0 ? 0 : static_cast<long long>(k_cur) + ceil_ratio(k_cur, delta);
    int prefix = static_cast<int>(std::min<long long>(want, n_res));

    std::vector<int> kept(remaining.begin(), remaining.begin() + prefix);
    std::vector<int> reduced_id(n, -1);
    for (int i = 0; i < prefix; ++i) reduced_id[kept[i]] = i;

    std::vector<WeightedEdge> edges;
    std::vector<int> boundary(prefix, 0);  // unit edges to discarded vertices
    long long total_boundary = 0;
    for (const auto& e : g.edges()) {
        if (removed[e.u] || removed[e.v]) continue;
        int ru = reduced_id[e.u], rv = reduced_id[e.v];
        if (ru >= 0 && rv >= 0) {
            edges.push_back({ru, rv, 1.0});
        } else if (ru >= 0) {
            ++boundary[ru];
            ++total_boundary;
        } else if (rv >= 0) {
            ++boundary[rv];
            ++total_boundary;
        }
    }

    int n_padded = 0;
    if (total_boundary > 0) {
        double want_padded = std::ceil(static_cast<double>(k_cur) * prefix / delta - 1e-9);
        if (want_padded > 5e7)
            throw InvalidParams("padded vertex count exceeds the practical limit");
        n_padded = static_cast<int>(want_padded);
    }
    // Boundary edges are rerouted to padded vertices round-robin in id order,
    // so padded degrees differ by at most one and no pair repeats (each kept
    // vertex has fewer boundary edges than there are padded vertices).
    int cursor = 0;
    for (int i = 0; i < prefix; ++i) {
        KVC_ASSERT(boundary[i] <= n_padded);
        for (int j = 0; j < boundary[i]; ++j) {
            edges.push_back({i, prefix + cursor, 1.0});
            cursor = (cursor + 1) % n_padded;
        }
    }

    KernelResult kr;
    kr.reduced = WeightedGraph(prefix + n_padded, std::move(edges));
    kr.k = k;
    kr.original_n = n;
    kr.id_map.assign(prefix + n_padded, KernelResult::kPaddedVertex);
    for (int i = 0; i < prefix; ++i) kr.id_map[i] = kept[i];
    kr.committed = VertexSet(std::move(committed));
    kr.epsilon = epsilon;
    return kr;
}

VertexSet lift_solution(const KernelResult& kr, const VertexSet& reduced_solution) {
    std::vector<char> used(kr.original_n, 0);
    std::vector<int> lifted;
    for (int v : kr.committed) {
        KVC_ASSERT(v >= 0 && v < kr.original_n && !used[v]);
        used[v] = 1;
        lifted.push_back(v);
    }
    for (int r : reduced_solution) {
        if (r < 0 || r >= static_cast<int>(kr.id_map.size()))
            throw LiftError("reduced vertex id " + std::to_string(r) + " out of range");
        int orig = kr.id_map[r];
        if (orig == KernelResult::kPaddedVertex) continue;  // padded vertices are dropped
        if (used[orig]) throw LiftError("lifted solution repeats original vertex " +
                                        std::to_string(orig));
        used[orig] = 1;
        lifted.push_back(orig);
    }
    if (static_cast<int>(lifted.size()) > kr.k)
        throw LiftError("reduced solution plus committed vertices exceed k = " +
                        std::to_string(kr.k));
    for (int v = 0; v < kr.original_n && static_cast<int>(lifted.size()) < kr.k; ++v)
        if (!used[v]) {
            used[v] = 1;
            lifted.push_back(v);
        }
    if (static_cast<int>(lifted.size()) != kr.k)
        throw LiftError("cannot pad lifted solution to k = " + std::to_string(kr.k));
    return VertexSet(std::move(lifted));
}

Solution greedy_max(const WeightedGraph& g, int k) {
    check_k(g, k);
    std::vector<char> in_set(g.num_vertices(), 0);
    std::vector<int> chosen;
    for (int round = 0; round < k; ++round) {
        int best = -1;
        double best_gain = -1.0;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (in_set[v]) continue;
            double gain = 0.0;
            for (const auto& [other, w] : g.neighbors(v))
                if (other == v || !in_set[other]) gain += w;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        in_set[best] = 1;
        chosen.push_back(best);
    }
    VertexSet set(std::move(chosen));
    return {set, covered_weight(g, set)};
}

Solution solve_via_2sat_pipeline(const WeightedGraph& g, int k, double epsilon,
                                 const TwoSatCcSolver& solver) {
    check_k(g, k);
    check_epsilon(epsilon);
    if (k == 0) return {};

    KernelResult kr = kernel_weighted(g, k, epsilon);
    Max2SatCcInstance inst = to_max2sat_cc(kr.reduced, k);
    std::vector<bool> assignment = solver(inst);
    if (static_cast<int>(assignment.size()) != inst.num_vars)
        throw SolverContractError("solver returned an assignment of wrong length");
    std::vector<int> chosen;
    for (int v = 0; v < inst.num_vars; ++v)
        if (assignment[v]) chosen.push_back(v);
    if (static_cast<int>(chosen.size()) != k)
        throw SolverContractError("solver returned " + std::to_string(chosen.size()) +
                                  " true variables, expected exactly " + std::to_string(k));
    VertexSet lifted = lift_solution(kr, VertexSet(std::move(chosen)));
    return {lifted, covered_weight(g, lifted)};
}

Solution solve_via_2sat_pipeline(const WeightedGraph& g, int k, double epsilon, uint64_t seed) {
    return solve_via_2sat_pipeline(g, k, epsilon, [seed](const Max2SatCcInstance& inst) {
        LocalSearchParams params;
        params.seed = seed;
        return local_search_max2sat_cc(inst, params);
    });
}

}  // namespace kvc
