#pragma once

#include <cstdint>
#include <vector>

#include "kvc/errors.hpp"
#include "kvc/graph.hpp"
#include "kvc/rng.hpp"

namespace kvc {

/// Vertex coloring chi: V -> {1..num_colors} for the multicolored problems.
class Coloring {
public:
    Coloring(std::vector<int> colors, int num_colors)
        : colors_(std::move(colors)), num_colors_(num_colors) {
        if (num_colors_ < 0) throw InvalidColoring("number of colors must be non-negative");
        for (int c : colors_)
            if (c < 1 || c > num_colors_)
                throw InvalidColoring("color " + std::to_string(c) + " outside [1, " +
                                      std::to_string(num_colors_) + "]");
    }

    int size() const { return static_cast<int>(colors_.size()); }
    int num_colors() const { return num_colors_; }
    int color(int v) const { return colors_[v]; }
    uint32_t color_bit(int v) const { return 1u << (colors_[v] - 1); }
    const std::vector<int>& colors() const { return colors_; }

    /// Bitmask of colors used by s; requires s colorful to be meaningful.
    uint32_t mask_of(const VertexSet& s) const {
        uint32_t mask = 0;
        for (int v : s) mask |= color_bit(v);
        return mask;
    }

    bool is_colorful(const VertexSet& s) const {
        uint32_t mask = 0;
        for (int v : s) {
            uint32_t bit = color_bit(v);
            if (mask & bit) return false;
            mask |= bit;
        }
        return true;
    }

    static Coloring uniform_random(int n, int k, Rng& rng) {
        if (n > 0 && k < 1) throw InvalidColoring("need at least one color");
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = uniform_int(rng, 1, k);
        return Coloring(std::move(colors), k);
    }

    static Coloring round_robin(int n, int k) {
        if (n > 0 && k < 1) throw InvalidColoring("need at least one color");
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = v % k + 1;
        return Coloring(std::move(colors), k);
    }

private:
    std::vector<int> colors_;
    int num_colors_ = 0;
};

}  // namespace kvc
