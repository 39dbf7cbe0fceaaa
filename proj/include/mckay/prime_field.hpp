#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace mckay {

bool is_prime(std::int64_t n);

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p);

  std::int64_t p() const { return p_; }

  std::int64_t reduce(std::int64_t a) const {
    const std::int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(a * b); }
  std::int64_t neg(std::int64_t a) const { return reduce(-a); }
  std::int64_t pow(std::int64_t a, std::int64_t k) const;
  /// Throws std::domain_error for zero.
  std::int64_t inv(std::int64_t a) const;

  /// Smallest generator of the multiplicative group.
  std::int64_t primitive_root() const;
  /// primitive_root()^((p-1)/e); requires e | p-1.
  std::int64_t root_of_unity(std::int64_t e) const;

 private:
  std::int64_t p_;
};

/// Value-type element of F_p.
struct FpElem {
  std::int64_t value = 0;
  std::int64_t modulus = 2;

  FpElem() = default;
  FpElem(std::int64_t v, std::int64_t p);

  FpElem operator+(FpElem o) const;
  FpElem operator-(FpElem o) const;
  FpElem operator*(FpElem o) const;
  FpElem operator-() const;
  /// Throws std::domain_error for zero.
  FpElem inverse() const;
  friend bool operator==(FpElem, FpElem) = default;
};

/// Dense matrices over F_p; entries are kept in [0, p).
using FpMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using FpVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

FpMatrix fp_reduce(const PrimeField& f, const FpMatrix& m);
FpMatrix fp_product(const PrimeField& f, const FpMatrix& a, const FpMatrix& b);

/// Basis of {v : m v = 0}, one vector per column.
FpMatrix kernel_basis(const PrimeField& f, const FpMatrix& m);

/// Reduced column echelon form of a full-column-rank basis, plus its pivot rows.
struct EchelonBasis {
  FpMatrix basis;                // rows x d, identity on the pivot rows
  std::vector<Eigen::Index> pivots;
};
EchelonBasis column_echelon(const PrimeField& f, const FpMatrix& columns);

/// Coefficients of det(x I - m), constant term first (Hessenberg reduction).
std::vector<std::int64_t> characteristic_polynomial(const PrimeField& f, const FpMatrix& m);

/// Distinct roots of a polynomial over F_p in ascending order, by exhaustive evaluation.
std::vector<std::int64_t> polynomial_roots(const PrimeField& f, std::span<const std::int64_t> poly);

/// Splits F_p^r into common eigenlines of pairwise commuting diagonalizable matrices.
///
/// Subspaces are refined by the eigenspaces of each matrix in turn; the result is
/// exactly r vectors (one per line), each normalized so that its first nonzero
/// coordinate is 1. Throws Error(SplitIncomplete) if a subspace of dimension > 1
/// survives every matrix, or if a matrix is not diagonalizable on some subspace.
std::vector<FpVector> fp_simultaneous_split(const PrimeField& f, std::span<const FpMatrix> mats);

/// Same, with matrices produced on demand (count of them, generator indexed 0..count-1).
std::vector<FpVector> fp_simultaneous_split(const PrimeField& f, Eigen::Index dim, std::size_t count,
                                            const std::function<FpMatrix(std::size_t)>& matrix);

}  // namespace mckay
