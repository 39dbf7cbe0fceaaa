#include "mckay/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mckay {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

namespace {

// Exact division of a by the monic polynomial b.
std::vector<BigInt> divide_monic(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<BigInt> q(a.size() - db, 0);
  for (std::size_t d = a.size() - 1;; --d) {
    const BigInt c = a[d];
    if (c != 0) {
      q[d - db] = c;
      for (std::size_t i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
    }
    if (d == db) break;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

// Nonzero non-leading coefficients of Phi_e; reduction only touches these.
using SparseTail = std::vector<std::pair<int, BigInt>>;

const SparseTail& sparse_tail(int e) {
  static std::mutex mutex;
  static std::map<int, SparseTail> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }
  const auto& poly = cyclotomic_polynomial(e);
  SparseTail tail;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    if (poly[i] != 0) tail.emplace_back(static_cast<int>(i), poly[i]);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(e, std::move(tail)).first->second;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<BigInt>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }
  // x^e - 1 divided by Phi_d for every proper divisor d.
  std::vector<BigInt> poly(static_cast<std::size_t>(e) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(e, std::move(poly)).first->second;
}

void reduce_mod_cyclotomic(std::vector<BigInt>& coeffs, int e) {
  const int phi = euler_phi(e);
  const auto& tail = sparse_tail(e);
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= phi; --d) {
    const BigInt c = coeffs[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const int shift = d - phi;
    for (const auto& [i, a] : tail) coeffs[static_cast<std::size_t>(shift + i)] -= c * a;
    coeffs[static_cast<std::size_t>(d)] = 0;
  }
  coeffs.resize(static_cast<std::size_t>(phi), 0);
}

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt() : order_(1), coeffs_(1, 0) {}

CycInt::CycInt(std::int64_t n) : order_(1), coeffs_(1, BigInt(n)) {}

CycInt::CycInt(const BigInt& n, int order)
    : order_(order), coeffs_(static_cast<std::size_t>(euler_phi(order)), 0) {
  coeffs_[0] = n;
}

CycInt::CycInt(int order, std::vector<BigInt> coeffs, bool reduced)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (!reduced) reduce_mod_cyclotomic(coeffs_, order_);
}

CycInt CycInt::root_of_unity(int order, std::int64_t k) {
  if (order < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(order), 0);
  c[static_cast<std::size_t>(mod_floor(k, order))] = 1;
  return CycInt(order, std::move(c), false);
}

CycInt CycInt::from_coefficients(int order, std::vector<BigInt> coeffs) {
  if (order < 1) throw std::invalid_argument("from_coefficients: order must be positive");
  if (coeffs.empty()) coeffs.push_back(0);
  return CycInt(order, std::move(coeffs), false);
}

CycInt CycInt::embed(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw std::invalid_argument("CycInt::embed: order must divide new order");
  const int step = new_order / order_;
  std::vector<BigInt> c(static_cast<std::size_t>((coeffs_.size() - 1) * step + 1), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * static_cast<std::size_t>(step)] = coeffs_[j];
  return CycInt(new_order, std::move(c), false);
}

CycInt CycInt::galois(std::int64_t k) const {
  if (std::gcd(mod_floor(k, order_), static_cast<std::int64_t>(order_)) != 1 && order_ > 1) {
    throw std::invalid_argument("CycInt::galois: exponent must be a unit");
  }
  std::vector<BigInt> c(static_cast<std::size_t>(order_), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    c[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(j) * k, order_))] += coeffs_[j];
  }
  return CycInt(order_, std::move(c), false);
}

std::optional<BigInt> CycInt::as_integer() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

bool CycInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

void CycInt::unify_with(CycInt& other) {
  if (order_ == other.order_) return;
  const int target = static_cast<int>(lcm(order_, other.order_));
  *this = embed(target);
  other = other.embed(target);
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  CycInt r = rhs;
  unify_with(r);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += r.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  CycInt r = rhs;
  unify_with(r);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= r.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
  CycInt r = rhs;
  unify_with(r);
  std::vector<BigInt> c(coeffs_.size() + r.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
      if (r.coeffs_[j] != 0) c[i + j] += coeffs_[i] * r.coeffs_[j];
    }
  }
  reduce_mod_cyclotomic(c, order_);
  coeffs_ = std::move(c);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  CycInt x = a;
  CycInt y = b;
  x.unify_with(y);
  return x.coeffs_ == y.coeffs_;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const BigInt& c = coeffs_[j];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (j == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "z" << order_;
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// RootSum

RootSum::RootSum(int order, std::vector<Term> terms) : order_(order) {
  std::map<int, std::int64_t> merged;
  for (const auto& [j, m] : terms) merged[static_cast<int>(mod_floor(j, order))] += m;
  for (const auto& [j, m] : merged) {
    if (m != 0) terms_.emplace_back(j, m);
  }
}

std::int64_t RootSum::weight() const {
  std::int64_t w = 0;
  for (const auto& [j, m] : terms_) w += m;
  return w;
}

RootSum RootSum::conjugate() const { return power_map(-1); }

RootSum RootSum::power_map(std::int64_t t) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [j, m] : terms_) out.emplace_back(static_cast<int>(mod_floor(j * t, order_)), m);
  return RootSum(order_, std::move(out));
}

RootSum RootSum::embed(int new_order) const {
  if (new_order % order_ != 0) throw std::invalid_argument("RootSum::embed: order must divide new order");
  const int step = new_order / order_;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [j, m] : terms_) out.emplace_back(j * step, m);
  return RootSum(new_order, std::move(out));
}

CycInt RootSum::to_cyc() const {
  std::vector<BigInt> c(static_cast<std::size_t>(order_), 0);
  for (const auto& [j, m] : terms_) c[static_cast<std::size_t>(j)] += m;
  return CycInt::from_coefficients(order_, std::move(c));
}

RootSum operator+(const RootSum& a, const RootSum& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("RootSum: orders differ");
  std::vector<RootSum::Term> terms(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return RootSum(a.order_, std::move(terms));
}

RootSum operator*(const RootSum& a, const RootSum& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("RootSum: orders differ");
  std::vector<RootSum::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [i, m] : a.terms_) {
    for (const auto& [j, n] : b.terms_) terms.emplace_back(i + j, m * n);
  }
  return RootSum(a.order_, std::move(terms));
}

RootSum RootSum::scaled(std::int64_t m) const {
  std::vector<Term> terms(terms_);
  for (auto& t : terms) t.second *= m;
  return RootSum(order_, std::move(terms));
}

// ---------------------------------------------------------------------------
// RootAccumulator

RootAccumulator::RootAccumulator(int order) : order_(order), slots_(static_cast<std::size_t>(order), 0) {}

void RootAccumulator::clear() { std::fill(slots_.begin(), slots_.end(), 0); }

void RootAccumulator::add(int exponent, std::int64_t weight) {
  slots_[static_cast<std::size_t>(mod_floor(exponent, order_))] += weight;
}

void RootAccumulator::add_product(std::int64_t weight, const RootSum& a, const RootSum& b) {
  for (const auto& [i, m] : a.terms()) {
    for (const auto& [j, n] : b.terms()) {
      int s = i + j;
      if (s >= order_) s -= order_;
      slots_[static_cast<std::size_t>(s)] += weight * m * n;
    }
  }
}

void RootAccumulator::add_product(std::int64_t weight, const RootSum& a, const RootSum& b,
                                  const RootSum& c) {
  for (const auto& [i, m] : a.terms()) {
    for (const auto& [j, n] : b.terms()) {
      int s = i + j;
      if (s >= order_) s -= order_;
      const std::int64_t w = weight * m * n;
      for (const auto& [k, l] : c.terms()) {
        int t = s + k;
        if (t >= order_) t -= order_;
        slots_[static_cast<std::size_t>(t)] += w * l;
      }
    }
  }
}

CycInt RootAccumulator::to_cyc() const {
  std::vector<BigInt> c(slots_.begin(), slots_.end());
  return CycInt::from_coefficients(order_, std::move(c));
}

std::optional<BigInt> RootAccumulator::as_integer() const {
  // Reduce modulo Phi_e in 128-bit arithmetic; fall back to BigInt if it could overflow.
  const auto& tail = sparse_tail(order_);
  const int phi = euler_phi(order_);
  constexpr __int128 limit = static_cast<__int128>(1) << 80;
  bool small = order_ < (1 << 20);
  for (const auto& [i, c] : tail) {
    if (boost::multiprecision::abs(c) > (std::int64_t{1} << 20)) small = false;
  }
  if (small) {
    std::vector<__int128> c(slots_.begin(), slots_.end());
    for (int d = order_ - 1; d >= phi && small; --d) {
      const __int128 lead = c[static_cast<std::size_t>(d)];
      if (lead == 0) continue;
      if (lead > limit || lead < -limit) small = false;
      // x^phi = -sum tail_i x^i, shifted by d - phi.
      for (const auto& [i, t] : tail) c[static_cast<std::size_t>(d - phi + i)] -= lead * static_cast<std::int64_t>(t);
      c[static_cast<std::size_t>(d)] = 0;
    }
    if (small) {
      for (int d = 1; d < phi; ++d) {
        if (c[static_cast<std::size_t>(d)] != 0) return std::nullopt;
      }
      const __int128 v = c[0];
      const bool neg = v < 0;
      unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
      BigInt out = static_cast<std::uint64_t>(u >> 64);
      out <<= 64;
      out += static_cast<std::uint64_t>(u);
      return neg ? BigInt(-out) : out;
    }
  }
  return to_cyc().as_integer();
}

}  // namespace mckay
