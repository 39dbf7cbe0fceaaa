#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mckay {

using BigInt = boost::multiprecision::cpp_int;

int euler_phi(int n);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
/// Results are cached; the returned reference stays valid for the process lifetime.
const std::vector<BigInt>& cyclotomic_polynomial(int e);

/// Element of Z[zeta_e] in the power basis 1, zeta, ..., zeta^(phi(e)-1).
///
/// The representation is reduced modulo Phi_e, so two values of the same order
/// are equal iff their coefficient vectors agree. Values of different orders are
/// compared (and combined) after embedding both into Q(zeta_lcm).
class CycInt {
 public:
  CycInt();
  CycInt(std::int64_t n);  // NOLINT: integers embed implicitly
  CycInt(const BigInt& n, int order = 1);

  /// zeta_order^k, any integer k.
  static CycInt root_of_unity(int order, std::int64_t k);
  /// Reduces an arbitrary-length coefficient vector modulo Phi_order.
  static CycInt from_coefficients(int order, std::vector<BigInt> coeffs);

  int order() const { return order_; }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// Same value written in Z[zeta_new_order]; new_order must be a multiple of order().
  CycInt embed(int new_order) const;

  /// The automorphism zeta -> zeta^k, gcd(k, order) = 1.
  CycInt galois(std::int64_t k) const;
  /// zeta -> zeta^-1, i.e. complex conjugation.
  CycInt galois_inverse() const { return galois(-1); }

  /// The rational integer this value equals, if it is one.
  std::optional<BigInt> as_integer() const;
  bool is_zero() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  CycInt operator-() const;

  friend bool operator==(const CycInt& a, const CycInt& b);

  /// Human readable form, e.g. "1 - 2*z8^3" (z8 = zeta_8).
  std::string to_string() const;

 private:
  CycInt(int order, std::vector<BigInt> coeffs, bool reduced);
  void unify_with(CycInt& other);

  int order_;
  std::vector<BigInt> coeffs_;
};

/// Reduces a coefficient vector of any length modulo Phi_e in place and
/// truncates it to phi(e) entries.
void reduce_mod_cyclotomic(std::vector<BigInt>& coeffs, int e);

/// A sum of e-th roots of unity with integer multiplicities, stored sparsely as
/// (exponent, count). This is an element of the group ring Z[C_e]; mapping it to
/// Z[zeta_e] is a ring homomorphism, which lets character arithmetic run on
/// eigenvalue multisets and reduce only once at the end.
class RootSum {
 public:
  using Term = std::pair<int, std::int64_t>;

  RootSum() = default;
  RootSum(int order, std::vector<Term> terms);

  int order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }

  /// Sum of all multiplicities (the character degree when this is chi(g)).
  std::int64_t weight() const;
  RootSum conjugate() const;
  /// zeta_e^j -> zeta_e^(j*t): value of the same character at g^t.
  RootSum power_map(std::int64_t t) const;
  /// Rewrites the sum with roots of order new_order (a multiple of order()).
  RootSum embed(int new_order) const;
  CycInt to_cyc() const;

  /// Multiset union (character sum) and convolution (character product).
  friend RootSum operator+(const RootSum& a, const RootSum& b);
  friend RootSum operator*(const RootSum& a, const RootSum& b);
  RootSum scaled(std::int64_t m) const;

  friend bool operator==(const RootSum&, const RootSum&) = default;

 private:
  int order_ = 1;
  std::vector<Term> terms_;
};

/// Dense accumulator over Z[C_e]; used for inner products of class functions.
class RootAccumulator {
 public:
  explicit RootAccumulator(int order);

  void clear();
  void add(int exponent, std::int64_t weight);
  /// Adds weight * a * b * c (all of this accumulator's order).
  void add_product(std::int64_t weight, const RootSum& a, const RootSum& b, const RootSum& c);
  void add_product(std::int64_t weight, const RootSum& a, const RootSum& b);

  CycInt to_cyc() const;
  /// The accumulated value if it reduces to a rational integer.
  std::optional<BigInt> as_integer() const;

 private:
  int order_;
  std::vector<std::int64_t> slots_;
};

}  // namespace mckay
