#include "kvc/two_sat.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kvc/rng.hpp"
#include "kvc/util.hpp"

namespace kvc {

Max2SatCcInstance to_max2sat_cc(const WeightedGraph& g, int k) {
    Max2SatCcInstance inst;
    inst.num_vars = g.num_vertices();
    inst.cardinality = k;
    for (const auto& e : g.edges()) {
        if (e.weight <= 0.0) continue;
        if (e.u == e.v)
            inst.clauses.push_back({e.u, Max2SatClause::kUnit, e.weight});
        else
            inst.clauses.push_back({e.u, e.v, e.weight});
    }
    return inst;
}

double satisfied_weight(const Max2SatCcInstance& inst, const std::vector<bool>& assignment) {
    KVC_ASSERT(static_cast<int>(assignment.size()) == inst.num_vars);
    double total = 0.0;
    for (const auto& c : inst.clauses)
        if (assignment[c.a] || (!c.is_unit() && assignment[c.b])) total += c.weight;
    return total;
}

std::string write_wcnf_cc(const Max2SatCcInstance& inst) {
    std::string out = "p wcnf-cc " + std::to_string(inst.num_vars) + " " +
                      std::to_string(inst.clauses.size()) + " " +
                      std::to_string(inst.cardinality) + "\n";
    for (const auto& c : inst.clauses) {
        out += format_double(c.weight);
        out += " " + std::to_string(c.a + 1);
        if (!c.is_unit()) out += " " + std::to_string(c.b + 1);
        out += " 0\n";
    }
    return out;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_weight_token(const std::string& tok, int line_no) {
    double w;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("bad weight '" + tok + "'", line_no);
    return w;
}

int parse_int_token(const std::string& tok, int line_no) {
    int v;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("bad integer '" + tok + "'", line_no);
    return v;
}

}  // namespace

Max2SatCcInstance parse_wcnf_cc(std::string_view text) {
    Max2SatCcInstance inst;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    size_t declared_clauses = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (!header_seen) {
            if (tokens.size() != 5 || tokens[0] != "p" || tokens[1] != "wcnf-cc")
                throw ParseError("expected header 'p wcnf-cc <vars> <clauses> <k>'", line_no);
            inst.num_vars = parse_int_token(tokens[2], line_no);
            declared_clauses = static_cast<size_t>(parse_int_token(tokens[3], line_no));
            inst.cardinality = parse_int_token(tokens[4], line_no);
            header_seen = true;
            continue;
        }
        if (inst.clauses.size() == declared_clauses)
            throw ParseError("more clauses than declared in header", line_no);
        if (tokens.size() < 3 || tokens.size() > 4 || tokens.back() != "0")
            throw ParseError("expected '<weight> <lit> [<lit>] 0'", line_no);
        Max2SatClause c;
        c.weight = parse_weight_token(tokens[0], line_no);
        if (c.weight < 0.0) throw ParseError("negative clause weight", line_no);
        int lit_a = parse_int_token(tokens[1], line_no);
        if (lit_a < 1 || lit_a > inst.num_vars) throw ParseError("literal out of range", line_no);
        c.a = lit_a - 1;
        if (tokens.size() == 4) {
            int lit_b = parse_int_token(tokens[2], line_no);
            if (lit_b < 1 || lit_b > inst.num_vars)
                throw ParseError("literal out of range", line_no);
            c.b = lit_b - 1;
        }
        inst.clauses.push_back(c);
    }
    if (!header_seen) throw ParseError("missing 'p wcnf-cc' header", line_no);
    if (inst.clauses.size() != declared_clauses)
        throw ParseError("fewer clauses than declared in header", line_no);
    return inst;
}

namespace {

// Clause truth-count bookkeeping for O(clauses(v)) flips.
class SearchState {
public:
    explicit SearchState(const Max2SatCcInstance& inst) : inst_(inst), by_var_(inst.num_vars) {
        for (size_t ci = 0; ci < inst.clauses.size(); ++ci) {
            const auto& c = inst.clauses[ci];
            by_var_[c.a].push_back(static_cast<int>(ci));
            if (!c.is_unit() && c.b != c.a) by_var_[c.b].push_back(static_cast<int>(ci));
        }
    }

    void reset(const std::vector<bool>& assignment) {
        assign_ = assignment;
        true_count_.assign(inst_.clauses.size(), 0);
        value_ = 0.0;
        for (size_t ci = 0; ci < inst_.clauses.size(); ++ci) {
            const auto& c = inst_.clauses[ci];
            int cnt = (assign_[c.a] ? 1 : 0) + (!c.is_unit() && c.b != c.a && assign_[c.b] ? 1 : 0);
            true_count_[ci] = cnt;
            if (cnt > 0) value_ += c.weight;
        }
    }

    double value() const { return value_; }
    const std::vector<bool>& assignment() const { return assign_; }

    void flip(int v) {
        bool now_true = !assign_[v];
        assign_[v] = now_true;
        for (int ci : by_var_[v]) {
            const auto& c = inst_.clauses[ci];
            if (now_true) {
                if (true_count_[ci] == 0) value_ += c.weight;
                ++true_count_[ci];
            } else {
                --true_count_[ci];
                if (true_count_[ci] == 0) value_ -= c.weight;
            }
        }
    }

private:
    const Max2SatCcInstance& inst_;
    std::vector<std::vector<int>> by_var_;
    std::vector<bool> assign_;
    std::vector<int> true_count_;
    double value_ = 0.0;
};

}  // namespace

std::vector<bool> local_search_max2sat_cc(const Max2SatCcInstance& inst,
                                          const LocalSearchParams& params) {
    int n = inst.num_vars;
    int k = inst.cardinality;
    if (k < 0 || k > n)
        throw InvalidK("cardinality " + std::to_string(k) + " outside [0, " + std::to_string(n) +
                       "]");
    if (params.restarts < 1 || params.non_improving_factor < 1)
        throw InvalidParams("local search needs at least one restart and a positive step budget");
    if (k == 0 || k == n) return std::vector<bool>(n, k == n);

    Rng rng(params.seed);
    SearchState state(inst);
    std::vector<bool> best_assign;
    double best_value = -1.0;
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;

    const long budget = static_cast<long>(params.non_improving_factor) * n;
    for (int restart = 0; restart < params.restarts; ++restart) {
        // Random k-subset start: partial Fisher-Yates over the id pool.
        for (int i = 0; i < k; ++i) std::swap(ids[i], ids[uniform_int(rng, i, n - 1)]);
        std::vector<bool> assignment(n, false);
        for (int i = 0; i < k; ++i) assignment[ids[i]] = true;
        state.reset(assignment);

        double restart_best = state.value();
        long since_improvement = 0;
        while (since_improvement < budget) {
            // Swap one true with one false variable; cardinality is preserved.
            int t, f;
            do {
                t = uniform_int(rng, 0, n - 1);
            } while (!state.assignment()[t]);
            do {
                f = uniform_int(rng, 0, n - 1);
            } while (state.assignment()[f]);
            double before = state.value();
            state.flip(t);
            state.flip(f);
            if (state.value() > restart_best) {
                restart_best = state.value();
                since_improvement = 0;
            } else {
                ++since_improvement;
                if (state.value() < before) {  // undo downhill moves
                    state.flip(f);
                    state.flip(t);
                }
            }
            if (state.value() > best_value) {
                best_value = state.value();
                best_assign = state.assignment();
            }
        }
        if (best_value < 0.0 || best_assign.empty()) {
            best_value = state.value();
            best_assign = state.assignment();
        }
    }
    return best_assign;
}

}  // namespace kvc
