#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kvc/coloring.hpp"
#include "kvc/graph.hpp"

namespace kvc {

/// Instance format: comment lines start with 'c'; the first significant line
/// is `p wvc <n> <m>`, followed by m records `<u> <v> <w>` with u == v
/// denoting a self-loop. Repeated pairs are summed on load.
WeightedGraph parse_graph(std::string_view text);

/// Canonical serialization (sorted edge list, shortest round-trip weights).
std::string write_graph(const WeightedGraph& g);

WeightedGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const WeightedGraph& g);

/// Coloring format: `p col <n> <k>` then n colors in 1..k, whitespace
/// separated; 'c' lines are comments.
Coloring parse_coloring(std::string_view text);
std::string write_coloring(const Coloring& chi);
Coloring load_coloring(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

struct GenParams {
    int n = 0;
    double density = 0.0;    // per-pair edge probability
    double loop_prob = 0.0;  // per-vertex self-loop probability (weighted mode only)
    bool unweighted = false;  // all weights 1, no loops
    int weight_decimals = 3;  // uniform [0,1] weights rounded to this many decimals
    uint64_t seed = 1;
};

/// Seeded Erdos-Renyi style generator; identical parameters produce a
/// byte-identical serialized instance.
WeightedGraph gen_random(const GenParams& params);

}  // namespace kvc
