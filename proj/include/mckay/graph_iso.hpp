#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mckay/int_matrix.hpp"

namespace mckay {

/// A vertex bijection f with a(i, j) = b(f(i), f(j)) and color_a[i] = color_b[f(i)],
/// found by color refinement followed by backtracking. Empty colors mean uncolored.
std::optional<std::vector<int>> find_isomorphism(const IntMatrix& a, const IntMatrix& b,
                                                 const std::vector<std::int64_t>& color_a = {},
                                                 const std::vector<std::int64_t>& color_b = {});

inline bool isomorphic(const IntMatrix& a, const IntMatrix& b, const std::vector<std::int64_t>& color_a = {},
                       const std::vector<std::int64_t>& color_b = {}) {
  return find_isomorphism(a, b, color_a, color_b).has_value();
}

}  // namespace mckay
