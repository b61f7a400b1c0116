#pragma once

#include <charconv>
#include <cmath>
#include <string>

#include "kvc/errors.hpp"

namespace kvc {

/// Shortest decimal string that round-trips through a double.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// ceil(num / den) for positive den, with a small slack so that ratios which
/// are mathematically integral (e.g. 3 / 0.3) do not round up from float dust.
inline int ceil_ratio(int num, double den) {
    if (!(den > 0.0)) throw InvalidParams("ceil_ratio: denominator must be positive");
    if (num <= 0) return 0;
    double q = static_cast<double>(num) / den;
    return static_cast<int>(std::ceil(q - 1e-9));
}

}  // namespace kvc
