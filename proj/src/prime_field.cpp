#include "mckay/prime_field.hpp"

#include <limits>
#include <stdexcept>

#include "mckay/error.hpp"

namespace mckay {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("PrimeField: modulus must be a prime below 2^31");
  }
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  std::int64_t base = reduce(a);
  std::int64_t result = 1 % p_;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

std::int64_t PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  std::vector<std::int64_t> factors;
  std::int64_t m = p_ - 1;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p_; ++g) {
    bool generator = true;
    for (std::int64_t q : factors) {
      if (pow(g, (p_ - 1) / q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("PrimeField: no primitive root found");
}

std::int64_t PrimeField::root_of_unity(std::int64_t e) const {
  if (e <= 0 || (p_ - 1) % e != 0) throw std::invalid_argument("PrimeField::root_of_unity: e must divide p-1");
  return pow(primitive_root(), (p_ - 1) / e);
}

FpElem::FpElem(std::int64_t v, std::int64_t p) : value(((v % p) + p) % p), modulus(p) {}

FpElem FpElem::operator+(FpElem o) const { return {value + o.value, modulus}; }
FpElem FpElem::operator-(FpElem o) const { return {value - o.value, modulus}; }
FpElem FpElem::operator*(FpElem o) const { return {value * o.value, modulus}; }
FpElem FpElem::operator-() const { return {-value, modulus}; }
FpElem FpElem::inverse() const { return {PrimeField(modulus).inv(value), modulus}; }

FpMatrix fp_reduce(const PrimeField& f, const FpMatrix& m) {
  return m.unaryExpr([&f](std::int64_t x) { return f.reduce(x); });
}

FpMatrix fp_product(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
  const std::int64_t p = f.p();
  const auto inner = static_cast<std::int64_t>(a.cols());
  // The plain integer product is exact when inner * (p-1)^2 fits in an int64.
  if (inner == 0 || (p - 1) <= std::numeric_limits<std::int64_t>::max() / (p - 1) / inner) {
    FpMatrix prod = a * b;
    return fp_reduce(f, prod);
  }
  FpMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<Eigen::Index> rref(const PrimeField& f, FpMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    m.row(sel).swap(m.row(row));
    const std::int64_t scale = f.inv(m(row, col));
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const std::int64_t factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

FpMatrix kernel_basis(const PrimeField& f, const FpMatrix& m) {
  FpMatrix r = fp_reduce(f, m);
  const auto pivots = rref(f, r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  FpMatrix basis(m.cols(), m.cols() - static_cast<Eigen::Index>(pivots.size()));
  basis.setZero();
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      basis(pivots[k], out) = f.neg(r(static_cast<Eigen::Index>(k), free));
    }
    ++out;
  }
  return basis;
}

EchelonBasis column_echelon(const PrimeField& f, const FpMatrix& columns) {
  FpMatrix t = columns.transpose();
  t = fp_reduce(f, t);
  auto pivots = rref(f, t);
  const auto rank = static_cast<Eigen::Index>(pivots.size());
  if (rank != columns.cols()) throw std::invalid_argument("column_echelon: columns are dependent");
  return {t.topRows(rank).transpose(), std::move(pivots)};
}

std::vector<std::int64_t> characteristic_polynomial(const PrimeField& f, const FpMatrix& input) {
  const Eigen::Index n = input.rows();
  FpMatrix h = fp_reduce(f, input);
  // Similarity reduction to upper Hessenberg form.
  for (Eigen::Index j = 0; j + 2 < n; ++j) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      if (h(i, j) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != j + 1) {
      h.row(sel).swap(h.row(j + 1));
      h.col(sel).swap(h.col(j + 1));
    }
    const std::int64_t pivot_inv = f.inv(h(j + 1, j));
    for (Eigen::Index k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      const std::int64_t u = f.mul(h(k, j), pivot_inv);
      for (Eigen::Index c = 0; c < n; ++c) h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (Eigen::Index r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  // p_m(x) = (x - h_mm) p_{m-1}(x) - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}(x)
  std::vector<std::vector<std::int64_t>> polys;
  polys.push_back({1});
  for (Eigen::Index m = 0; m < n; ++m) {
    const auto& prev = polys.back();
    std::vector<std::int64_t> next(prev.size() + 1, 0);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], prev[d]);
      next[d] = f.sub(next[d], f.mul(h(m, m), prev[d]));
    }
    std::int64_t sub = 1;
    for (Eigen::Index i = m - 1; i >= 0; --i) {
      sub = f.mul(sub, h(i + 1, i));
      if (sub == 0) break;
      const std::int64_t coef = f.mul(h(i, m), sub);
      if (coef == 0) continue;
      const auto& pi = polys[static_cast<std::size_t>(i)];
      for (std::size_t d = 0; d < pi.size(); ++d) next[d] = f.sub(next[d], f.mul(coef, pi[d]));
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

std::vector<std::int64_t> polynomial_roots(const PrimeField& f, std::span<const std::int64_t> poly) {
  std::vector<std::int64_t> roots;
  for (std::int64_t x = 0; x < f.p(); ++x) {
    std::int64_t acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

std::vector<FpVector> fp_simultaneous_split(const PrimeField& f, std::span<const FpMatrix> mats) {
  if (mats.empty()) throw Error(ErrorCode::SplitIncomplete, "no matrices to split by");
  return fp_simultaneous_split(f, mats.front().rows(), mats.size(),
                               [&mats](std::size_t i) { return mats[i]; });
}

std::vector<FpVector> fp_simultaneous_split(const PrimeField& f, Eigen::Index dim, std::size_t count,
                                            const std::function<FpMatrix(std::size_t)>& matrix) {
  std::vector<EchelonBasis> spaces;
  spaces.push_back(column_echelon(f, FpMatrix::Identity(dim, dim)));
  auto all_lines = [&spaces] {
    for (const auto& s : spaces) {
      if (s.basis.cols() > 1) return false;
    }
    return true;
  };
  for (std::size_t idx = 0; idx < count && !all_lines(); ++idx) {
    const FpMatrix m = fp_reduce(f, matrix(idx));
    std::vector<EchelonBasis> refined;
    for (auto& space : spaces) {
      const Eigen::Index d = space.basis.cols();
      if (d == 1) {
        refined.push_back(std::move(space));
        continue;
      }
      const FpMatrix image = fp_product(f, m, space.basis);
      FpMatrix restricted(d, d);
      for (Eigen::Index k = 0; k < d; ++k) restricted.row(k) = image.row(space.pivots[static_cast<std::size_t>(k)]);
      const auto poly = characteristic_polynomial(f, restricted);
      const auto roots = polynomial_roots(f, poly);
      if (roots.size() <= 1) {
        const std::int64_t lambda = roots.empty() ? -1 : roots.front();
        if (lambda < 0 || restricted != FpMatrix::Identity(d, d) * lambda) {
          throw Error(ErrorCode::SplitIncomplete, "matrix is not diagonalizable over F_p on a subspace");
        }
        refined.push_back(std::move(space));
        continue;
      }
      Eigen::Index total = 0;
      for (std::int64_t lambda : roots) {
        FpMatrix shifted = restricted;
        for (Eigen::Index k = 0; k < d; ++k) shifted(k, k) = f.sub(shifted(k, k), lambda);
        const FpMatrix kernel = kernel_basis(f, shifted);
        total += kernel.cols();
        refined.push_back(column_echelon(f, fp_product(f, space.basis, kernel)));
      }
      if (total != d) throw Error(ErrorCode::SplitIncomplete, "matrix is not diagonalizable over F_p on a subspace");
    }
    spaces = std::move(refined);
  }
  if (!all_lines()) throw Error(ErrorCode::SplitIncomplete, "a subspace of dimension > 1 could not be split");
  std::vector<FpVector> lines;
  lines.reserve(spaces.size());
  for (const auto& s : spaces) lines.emplace_back(s.basis.col(0));
  return lines;
}

}  // namespace mckay
