#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Core>

#include "mckay/cyclotomic.hpp"

namespace mckay {

/// Square matrices with nonnegative integer entries (adjacency / multiplicity matrices).
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

/// m^k by repeated squaring, in the matrix's own scalar type.
template <typename Derived>
auto matrix_power(const Eigen::MatrixBase<Derived>& m, int k) {
  using Plain = typename Derived::PlainObject;
  Plain result = Plain::Identity(m.rows(), m.cols());
  Plain base = m;
  while (k > 0) {
    if (k & 1) result = (result * base).eval();
    k >>= 1;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

/// tr(m^k), exact. Uses int64 arithmetic when the max-row-sum bound proves it
/// cannot overflow, otherwise arbitrary precision.
inline BigInt trace_of_power(const IntMatrix& m, int k) {
  const Eigen::Index n = m.rows();
  if (k == 0) return BigInt(n);
  const std::int64_t row_bound = std::max<std::int64_t>(1, n == 0 ? 1 : m.cwiseAbs().rowwise().sum().maxCoeff());
  long double bound = 1;
  for (int i = 0; i < k; ++i) bound *= static_cast<long double>(row_bound);
  if (bound * static_cast<long double>(n) < static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4)) {
    return BigInt(matrix_power(m, k).trace());
  }
  std::vector<BigInt> base(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) base[static_cast<std::size_t>(i * n + j)] = m(i, j);
  }
  auto multiply = [n](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> c(a.size(), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index l = 0; l < n; ++l) {
        const BigInt& x = a[static_cast<std::size_t>(i * n + l)];
        if (x == 0) continue;
        for (Eigen::Index j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += x * b[static_cast<std::size_t>(l * n + j)];
      }
    }
    return c;
  };
  std::vector<BigInt> result = base;
  for (int i = 1; i < k; ++i) result = multiply(result, base);
  BigInt tr = 0;
  for (Eigen::Index i = 0; i < n; ++i) tr += result[static_cast<std::size_t>(i * n + i)];
  return tr;
}

}  // namespace mckay
