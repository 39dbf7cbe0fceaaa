#include "mckay/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mckay/cyclotomic.hpp"
#include "mckay/error.hpp"
#include "mckay/prime_field.hpp"

namespace mckay {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::string carrier, int order, std::vector<int> table, std::vector<std::string> names,
                         std::vector<int> generators)
    : carrier_(std::move(carrier)),
      n_(order),
      table_(std::move(table)),
      inverse_(static_cast<std::size_t>(order), -1),
      orders_(static_cast<std::size_t>(order), 0),
      names_(std::move(names)),
      generators_(std::move(generators)) {
  if (n_ < 1 || table_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) ||
      names_.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("FiniteGroup: table and names must match the order");
  }
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    int x = a;
    int k = 1;
    while (x != 0 && k <= n_) {
      x = mul(x, a);
      ++k;
    }
    orders_[static_cast<std::size_t>(a)] = k;
  }
}

int FiniteGroup::power(int g, std::int64_t t) const {
  const std::int64_t ord = element_order(g);
  t %= ord;
  if (t < 0) t += ord;
  int result = 0;
  int base = g;
  while (t > 0) {
    if (t & 1) result = mul(result, base);
    base = mul(base, base);
    t >>= 1;
  }
  return result;
}

void FiniteGroup::set_base(GroupPtr base, std::vector<int> to_base, std::vector<int> kernel) {
  base_ = std::move(base);
  to_base_ = std::move(to_base);
  base_kernel_ = std::move(kernel);
}

void validate_group(const FiniteGroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw std::logic_error("element 0 is not a two-sided identity");
    const int b = g.inv(a);
    if (b < 0 || g.mul(b, a) != 0) throw std::logic_error("missing two-sided inverse");
  }
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[static_cast<std::size_t>(g.mul(a, b))] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n) throw std::logic_error("Cayley table row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[static_cast<std::size_t>(g.mul(b, a))] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n) throw std::logic_error("Cayley table column is not a permutation");
  }
  auto assoc = [&g](int a, int b, int c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= 256) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (!assoc(a, b, c)) throw std::logic_error("multiplication is not associative");
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw std::logic_error("multiplication is not associative");
    }
  }
}

namespace {

std::string render_word(const std::vector<int>& word, const std::vector<std::string>& gen_names) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    out += gen_names[static_cast<std::size_t>(word[i])];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Breadth-first closure under right multiplication by the generators. The
// Cayley table is filled column by column: a * (b' s) = (a * b') s.
template <class Elem, class Mul, class Key>
GroupPtr close_under(std::string carrier, const Elem& identity, const std::vector<Elem>& gens,
                     const std::vector<std::string>& gen_names, Mul mul, Key key, int cap) {
  std::vector<Elem> elems{identity};
  std::map<std::vector<std::int64_t>, int> index;
  index.emplace(key(identity), 0);
  std::vector<int> parent{-1};
  std::vector<int> via{-1};
  std::vector<std::vector<int>> words{{}};
  std::vector<std::vector<int>> right(gens.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Elem y = mul(elems[i], gens[s]);
      auto k = key(y);
      auto it = index.find(k);
      int idx;
      if (it == index.end()) {
        if (static_cast<int>(elems.size()) >= cap) {
          throw Error(ErrorCode::ClosureDiverged, carrier + ": closure exceeds " + std::to_string(cap) + " elements");
        }
        idx = static_cast<int>(elems.size());
        index.emplace(std::move(k), idx);
        auto word = words[i];
        word.push_back(static_cast<int>(s));
        elems.push_back(std::move(y));
        parent.push_back(static_cast<int>(i));
        via.push_back(static_cast<int>(s));
        words.push_back(std::move(word));
      } else {
        idx = it->second;
      }
      right[s].push_back(idx);
    }
  }
  const int n = static_cast<int>(elems.size());
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> table(un * un);
  for (std::size_t a = 0; a < un; ++a) table[a * un] = static_cast<int>(a);
  for (std::size_t b = 1; b < un; ++b) {
    const auto& r = right[static_cast<std::size_t>(via[b])];
    const auto pb = static_cast<std::size_t>(parent[b]);
    for (std::size_t a = 0; a < un; ++a) table[a * un + b] = r[static_cast<std::size_t>(table[a * un + pb])];
  }
  std::vector<std::string> names;
  names.reserve(un);
  for (const auto& w : words) names.push_back(render_word(w, gen_names));
  std::vector<int> generators;
  for (const auto& r : right) generators.push_back(r[0]);
  return std::make_shared<FiniteGroup>(std::move(carrier), n, std::move(table), std::move(names),
                                       std::move(generators));
}

// 2x2 matrices over Z[zeta_e] with every entry stored doubled, so that the
// binary polyhedral generators have integral entries.
struct Mat2 {
  std::array<CycInt, 4> m;
};

CycInt halve(const CycInt& v) {
  std::vector<BigInt> c(v.coeffs().begin(), v.coeffs().end());
  for (auto& x : c) {
    if (x % 2 != 0) throw std::logic_error("matrix product left the doubled lattice");
    x /= 2;
  }
  return CycInt::from_coefficients(v.order(), std::move(c));
}

GroupPtr close_matrices(std::string carrier, int e, const std::vector<Mat2>& gens,
                        const std::vector<std::string>& names, int cap) {
  auto mul = [](const Mat2& x, const Mat2& y) {
    const auto& a = x.m;
    const auto& b = y.m;
    return Mat2{{halve(a[0] * b[0] + a[1] * b[2]), halve(a[0] * b[1] + a[1] * b[3]),
                 halve(a[2] * b[0] + a[3] * b[2]), halve(a[2] * b[1] + a[3] * b[3])}};
  };
  auto key = [e](const Mat2& x) {
    std::vector<std::int64_t> k;
    for (const auto& entry : x.m) {
      const CycInt v = entry.embed(e);
      for (const auto& c : v.coeffs()) k.push_back(static_cast<std::int64_t>(c));
    }
    return k;
  };
  const Mat2 id{{CycInt(2), CycInt(0), CycInt(0), CycInt(2)}};
  return close_under(std::move(carrier), id, gens, names, mul, key, cap);
}

// Doubled quaternion 2q = A + Bi + Cj + Dk as a doubled SU(2) matrix.
Mat2 quaternion(int e, const CycInt& a, const CycInt& b, const CycInt& c, const CycInt& d) {
  const CycInt i = CycInt::root_of_unity(e, e / 4);
  return Mat2{{a + b * i, c + d * i, -c + d * i, a - b * i}};
}

GroupPtr build_binary_dihedral(int n, int cap) {
  const int e = 2 * n;
  const Mat2 a{{CycInt::root_of_unity(e, 1) * 2, CycInt(0), CycInt(0), CycInt::root_of_unity(e, -1) * 2}};
  const Mat2 x{{CycInt(0), CycInt(2), CycInt(-2), CycInt(0)}};
  return close_matrices("bindihedral:" + std::to_string(n), e, {a, x}, {"a", "x"}, cap);
}

GroupPtr build_binary_poly(BinaryKind kind, int cap) {
  const int e = kind == BinaryKind::T ? 4 : kind == BinaryKind::O ? 8 : 20;
  std::vector<Mat2> gens{quaternion(e, 0, 2, 0, 0), quaternion(e, 0, 0, 2, 0), quaternion(e, -1, 1, 1, 1)};
  std::vector<std::string> names{"i", "j", "w"};
  std::string carrier = "binary:T";
  if (kind == BinaryKind::O) {
    const CycInt sqrt2 = CycInt::root_of_unity(8, 1) + CycInt::root_of_unity(8, 7);
    gens.push_back(quaternion(e, sqrt2, sqrt2, 0, 0));
    names.emplace_back("o");
    carrier = "binary:O";
  } else if (kind == BinaryKind::I) {
    const CycInt phi_inv = CycInt::root_of_unity(20, 4) + CycInt::root_of_unity(20, 16);
    gens.push_back(quaternion(e, phi_inv + 1, phi_inv, 1, 0));
    names.emplace_back("v");
    carrier = "binary:I";
  }
  return close_matrices(std::move(carrier), e, gens, names, cap);
}

struct Affine {
  int flip;
  int shift;
};

GroupPtr build_dihedral(int n, int cap) {
  // x -> +-x + k on Z/n, with the sign kept as a separate bit so that n = 2 stays faithful.
  auto mul = [n](const Affine& x, const Affine& y) {
    const int k = x.flip ? x.shift - y.shift : x.shift + y.shift;
    return Affine{x.flip ^ y.flip, ((k % n) + n) % n};
  };
  auto key = [](const Affine& x) { return std::vector<std::int64_t>{x.flip, x.shift}; };
  return close_under("dihedral:" + std::to_string(n), Affine{0, 0}, std::vector<Affine>{{0, 1 % n}, {1, 0}},
                     {"r", "s"}, mul, key, cap);
}

GroupPtr build_cyclic(int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> table(un * un);
  std::vector<std::string> names(un);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = (a + b) % n;
    names[static_cast<std::size_t>(a)] = a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a);
  }
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return std::make_shared<FiniteGroup>("cyclic:" + std::to_string(n), n, std::move(table), std::move(names),
                                       std::move(gens));
}

int ipow(int b, int k) {
  int r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

std::vector<int> digits(int index, int base, int count) {
  std::vector<int> d(static_cast<std::size_t>(count));
  for (auto& x : d) {
    x = index % base;
    index /= base;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int base) {
  int index = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) index = index * base + *it;
  return index;
}

GroupPtr build_elemab(int p, int n) {
  const int order = ipow(p, n);
  const auto un = static_cast<std::size_t>(order);
  std::vector<int> table(un * un);
  std::vector<std::string> names(un);
  for (int a = 0; a < order; ++a) {
    const auto da = digits(a, p, n);
    for (int b = 0; b < order; ++b) {
      auto db = digits(b, p, n);
      for (int i = 0; i < n; ++i) db[static_cast<std::size_t>(i)] = (db[static_cast<std::size_t>(i)] + da[static_cast<std::size_t>(i)]) % p;
      table[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = from_digits(db, p);
    }
    std::string name;
    for (int i = 0; i < n; ++i) {
      const int c = da[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      name += "x" + std::to_string(i + 1);
      if (c > 1) name += "^" + std::to_string(c);
    }
    names[static_cast<std::size_t>(a)] = name.empty() ? "e" : name;
  }
  std::vector<int> gens;
  for (int i = 0; i < n; ++i) gens.push_back(ipow(p, i));
  return std::make_shared<FiniteGroup>("elemab:" + std::to_string(p) + ":" + std::to_string(n), order,
                                       std::move(table), std::move(names), std::move(gens));
}

GroupPtr build_heisenberg(int p, int n, int cap) {
  // (a, b, c) stored as a|b|c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+b'.a).
  using Triple = std::vector<int>;
  const auto un = static_cast<std::size_t>(n);
  auto mul = [p, un](const Triple& x, const Triple& y) {
    Triple z(2 * un + 1);
    int dot = 0;
    for (std::size_t i = 0; i < un; ++i) {
      z[i] = (x[i] + y[i]) % p;
      z[un + i] = (x[un + i] + y[un + i]) % p;
      dot += y[un + i] * x[i];
    }
    z[2 * un] = (x[2 * un] + y[2 * un] + dot) % p;
    return z;
  };
  auto key = [](const Triple& x) { return std::vector<std::int64_t>(x.begin(), x.end()); };
  std::vector<Triple> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < un; ++i) {
    Triple t(2 * un + 1, 0);
    t[i] = 1;
    gens.push_back(t);
    names.push_back("x" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < un; ++i) {
    Triple t(2 * un + 1, 0);
    t[un + i] = 1;
    gens.push_back(t);
    names.push_back("y" + std::to_string(i + 1));
  }
  if (n == 0) {
    Triple t(1, 1);
    gens.push_back(t);
    names.emplace_back("z");
  }
  return close_under("heis:" + std::to_string(p) + ":" + std::to_string(n), Triple(2 * un + 1, 0), gens, names, mul,
                     key, cap);
}

GroupPtr build_extraspecial(int n, bool plus, int cap) {
  // Central product of n order-8 factors; each factor coordinate is reduced to
  // the least element of its coset mod the factor's centre, the lost central
  // parts being collected in the last slot.
  const GroupPtr dih = build_dihedral(4, cap);
  const GroupPtr quat = build_binary_dihedral(2, cap);
  std::vector<GroupPtr> factors;
  std::vector<int> centre;
  for (int i = 0; i < n; ++i) {
    const GroupPtr f = (!plus && i == n - 1) ? quat : dih;
    factors.push_back(f);
    int z = 0;
    for (int g = 1; g < f->order(); ++g) {
      if (f->element_order(g) == 2 && std::all_of(f->generators().begin(), f->generators().end(),
                                                  [&](int h) { return f->mul(g, h) == f->mul(h, g); })) {
        z = g;
      }
    }
    centre.push_back(z);
  }
  using Elem = std::vector<int>;
  const auto un = static_cast<std::size_t>(n);
  auto normalize = [factors, centre, un](Elem x) {
    for (std::size_t i = 0; i < un; ++i) {
      const int alt = factors[i]->mul(centre[i], x[i]);
      if (alt < x[i]) {
        x[i] = alt;
        x[un] ^= 1;
      }
    }
    return x;
  };
  auto mul = [factors, un, normalize](const Elem& x, const Elem& y) {
    Elem z(un + 1);
    for (std::size_t i = 0; i < un; ++i) z[i] = factors[i]->mul(x[i], y[i]);
    z[un] = x[un] ^ y[un];
    return normalize(z);
  };
  auto key = [](const Elem& x) { return std::vector<std::int64_t>(x.begin(), x.end()); };
  std::vector<Elem> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < un; ++i) {
    const auto& f = factors[i];
    for (int g : f->generators()) {
      Elem t(un + 1, 0);
      t[i] = g;
      gens.push_back(normalize(t));
      names.push_back(f->element_names()[static_cast<std::size_t>(g)] + std::to_string(i + 1));
    }
  }
  if (n == 0) {
    gens.push_back(Elem{1});
    names.emplace_back("z");
  }
  return close_under(std::string("extraspecial:") + (plus ? "+" : "-") + ":" + std::to_string(n), Elem(un + 1, 0),
                     gens, names, mul, key, cap);
}

GroupPtr build_product(const GroupPtr& g, const GroupPtr& h, const std::string& carrier) {
  const int ng = g->order();
  const int nh = h->order();
  const int n = ng * nh;
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> table(un * un);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] =
          g->mul(a / nh, b / nh) * nh + h->mul(a % nh, b % nh);
    }
  }
  std::vector<std::string> names(un);
  std::vector<int> to_base(un);
  for (int a = 0; a < n; ++a) {
    names[static_cast<std::size_t>(a)] = "(" + g->element_names()[static_cast<std::size_t>(a / nh)] + "," +
                                         h->element_names()[static_cast<std::size_t>(a % nh)] + ")";
    to_base[static_cast<std::size_t>(a)] = a / nh;
  }
  std::vector<int> gens;
  for (int x : g->generators()) gens.push_back(x * nh);
  for (int y : h->generators()) gens.push_back(y);
  std::vector<int> kernel(static_cast<std::size_t>(nh));
  std::iota(kernel.begin(), kernel.end(), 0);
  auto out = std::make_shared<FiniteGroup>(carrier, n, std::move(table), std::move(names), std::move(gens));
  out->set_base(g, std::move(to_base), std::move(kernel));
  return out;
}

// ---------------------------------------------------------------------------
// Actions on abelian kernels

struct KernelShape {
  int modulus;
  int dim;
  int order;
};

KernelShape kernel_shape(const GroupSpec& kernel) {
  if (const auto* c = std::get_if<CyclicSpec>(&kernel.node)) return {c->n, 1, c->n};
  if (const auto* e = std::get_if<ElemAbSpec>(&kernel.node)) return {e->p, e->n, ipow(e->p, e->n)};
  throw Error(ErrorCode::InvalidAction, "semidirect kernel must be cyclic:m or elemab:p:n");
}

using Matrix = std::vector<int>;

Matrix mat_mul(const Matrix& a, const Matrix& b, const KernelShape& k) {
  const auto d = static_cast<std::size_t>(k.dim);
  Matrix c(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t l = 0; l < d; ++l) {
      for (std::size_t j = 0; j < d; ++j) c[i * d + j] = (c[i * d + j] + a[i * d + l] * b[l * d + j]) % k.modulus;
    }
  }
  return c;
}

Matrix mat_identity(const KernelShape& k) {
  const auto d = static_cast<std::size_t>(k.dim);
  Matrix m(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1 % k.modulus;
  return m;
}

bool mat_invertible(const Matrix& m, const KernelShape& k) {
  if (k.dim == 1) return std::gcd(m[0], k.modulus) == 1;
  PrimeField f(k.modulus);
  FpMatrix a(k.dim, k.dim);
  for (int i = 0; i < k.dim; ++i) {
    for (int j = 0; j < k.dim; ++j) a(i, j) = m[static_cast<std::size_t>(i * k.dim + j)];
  }
  return kernel_basis(f, a).cols() == 0;
}

// Index of M v for the kernel element with the given index.
int apply(const Matrix& m, int index, const KernelShape& k) {
  const auto v = digits(index, k.modulus, k.dim);
  std::vector<int> w(static_cast<std::size_t>(k.dim), 0);
  for (int i = 0; i < k.dim; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < k.dim; ++j) acc += static_cast<std::int64_t>(m[static_cast<std::size_t>(i * k.dim + j)]) * v[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(i)] = static_cast<int>(acc % k.modulus);
  }
  return from_digits(w, k.modulus);
}

// Extends generator images to every acting element; nullopt when the images do
// not define a homomorphism.
std::optional<std::vector<Matrix>> extend_action(const FiniteGroup& g, const std::vector<Matrix>& images,
                                                 const KernelShape& k) {
  std::vector<Matrix> phi(static_cast<std::size_t>(g.order()));
  std::vector<char> done(static_cast<std::size_t>(g.order()), 0);
  phi[0] = mat_identity(k);
  done[0] = 1;
  std::vector<int> queue{0};
  const auto gens = g.generators();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int x = queue[q];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const int y = g.mul(x, gens[s]);
      Matrix m = mat_mul(phi[static_cast<std::size_t>(x)], images[s], k);
      if (!done[static_cast<std::size_t>(y)]) {
        phi[static_cast<std::size_t>(y)] = std::move(m);
        done[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      } else if (phi[static_cast<std::size_t>(y)] != m) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != g.order()) throw std::logic_error("generators do not generate the group");
  return phi;
}

std::vector<int> action_kernel(const std::vector<Matrix>& phi, const KernelShape& k) {
  const Matrix id = mat_identity(k);
  std::vector<int> kernel;
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (phi[x] == id) kernel.push_back(static_cast<int>(x));
  }
  return kernel;
}

bool transitive_on_nonzero(const std::vector<Matrix>& images, const KernelShape& k) {
  if (k.order <= 2) return true;
  std::vector<char> seen(static_cast<std::size_t>(k.order), 0);
  std::vector<int> orbit{1};
  seen[1] = 1;
  for (std::size_t q = 0; q < orbit.size(); ++q) {
    for (const auto& m : images) {
      const int y = apply(m, orbit[q], k);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        orbit.push_back(y);
      }
    }
  }
  return static_cast<int>(orbit.size()) == k.order - 1;
}

std::vector<Matrix> automorphisms(const KernelShape& k) {
  std::vector<Matrix> out;
  const int entries = k.dim * k.dim;
  const int total = ipow(k.modulus, entries);
  for (int code = 0; code < total; ++code) {
    auto d = digits(code, k.modulus, entries);
    Matrix m(d.rbegin(), d.rend());
    if (mat_invertible(m, k)) out.push_back(std::move(m));
  }
  return out;
}

GroupPtr build_semidirect(const GroupPtr& g, const GroupPtr& kgroup, const KernelShape& shape,
                          const std::vector<Matrix>& phi, const std::string& carrier) {
  const int nk = kgroup->order();
  const int ng = g->order();
  std::vector<std::vector<int>> perm(static_cast<std::size_t>(ng), std::vector<int>(static_cast<std::size_t>(nk)));
  for (int x = 0; x < ng; ++x) {
    for (int v = 0; v < nk; ++v) perm[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)] = apply(phi[static_cast<std::size_t>(x)], v, shape);
  }
  const int n = ng * nk;
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> table(un * un);
  for (int a = 0; a < n; ++a) {
    const int g1 = a / nk;
    const int k1 = a % nk;
    const auto& p1 = perm[static_cast<std::size_t>(g1)];
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] =
          g->mul(g1, b / nk) * nk + kgroup->mul(k1, p1[static_cast<std::size_t>(b % nk)]);
    }
  }
  std::vector<std::string> names(un);
  std::vector<int> to_base(un);
  for (int a = 0; a < n; ++a) {
    names[static_cast<std::size_t>(a)] = "(" + kgroup->element_names()[static_cast<std::size_t>(a % nk)] + "|" +
                                         g->element_names()[static_cast<std::size_t>(a / nk)] + ")";
    to_base[static_cast<std::size_t>(a)] = a / nk;
  }
  std::vector<int> gens;
  for (int x : g->generators()) gens.push_back(x * nk);
  for (int y : kgroup->generators()) gens.push_back(y);
  std::vector<int> kernel(static_cast<std::size_t>(nk));
  std::iota(kernel.begin(), kernel.end(), 0);
  auto out = std::make_shared<FiniteGroup>(carrier, n, std::move(table), std::move(names), std::move(gens));
  out->set_base(g, std::move(to_base), std::move(kernel));
  return out;
}

std::int64_t expected_order(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::int64_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return s.n;
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return 2 * static_cast<std::int64_t>(s.n);
        } else if constexpr (std::is_same_v<T, BinaryDihedralSpec>) {
          return 4 * static_cast<std::int64_t>(s.n);
        } else if constexpr (std::is_same_v<T, BinaryPolySpec>) {
          return s.kind == BinaryKind::T ? 24 : s.kind == BinaryKind::O ? 48 : 120;
        } else if constexpr (std::is_same_v<T, Extraspecial2Spec>) {
          return s.n > 30 ? std::int64_t{1} << 62 : std::int64_t{1} << (1 + 2 * s.n);
        } else if constexpr (std::is_same_v<T, HeisenbergSpec> || std::is_same_v<T, ElemAbSpec>) {
          std::int64_t r = std::is_same_v<T, HeisenbergSpec> ? s.p : 1;
          const int k = std::is_same_v<T, HeisenbergSpec> ? 2 * s.n : s.n;
          for (int i = 0; i < k && r < (std::int64_t{1} << 40); ++i) r *= s.p;
          return r;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return std::min(expected_order(*s.left) * expected_order(*s.right), std::int64_t{1} << 62);
        } else {
          return std::min(expected_order(*s.acting) * expected_order(*s.kernel), std::int64_t{1} << 62);
        }
      },
      spec.node);
}

GroupPtr build_unchecked(const GroupSpec& spec, const BuildOptions& options);

GroupPtr build_semidirect_spec(const SemidirectSpec& s, const BuildOptions& options, const std::string& carrier) {
  const GroupPtr g = build_unchecked(*s.acting, options);
  const KernelShape shape = kernel_shape(*s.kernel);
  const GroupPtr k = build_unchecked(*s.kernel, options);
  KernelAction action;
  if (s.action) {
    action = make_action(*g, *s.kernel, *s.action);
  } else {
    auto candidates = transitive_actions(*g, *s.kernel);
    if (candidates.empty()) throw Error(ErrorCode::InvalidAction, "no action transitive on nonzero kernel elements");
    auto chosen = candidates.begin();
    for (auto it = candidates.begin(); it != candidates.end(); ++it) {
      const Subgroup ker = subgroup_from_elements(g, it->kernel);
      if (!is_abelian(*ker.induced())) {
        chosen = it;
        break;
      }
    }
    action = *chosen;
  }
  const auto phi = extend_action(*g, action.images, shape);
  return build_semidirect(g, k, shape, *phi, carrier);
}

GroupPtr build_unchecked(const GroupSpec& spec, const BuildOptions& options) {
  const int cap = options.order_cap;
  const std::string carrier = to_string(spec);
  return std::visit(
      [&](const auto& s) -> GroupPtr {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return build_cyclic(s.n);
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return build_dihedral(s.n, cap);
        } else if constexpr (std::is_same_v<T, BinaryDihedralSpec>) {
          return build_binary_dihedral(s.n, cap);
        } else if constexpr (std::is_same_v<T, BinaryPolySpec>) {
          return build_binary_poly(s.kind, cap);
        } else if constexpr (std::is_same_v<T, Extraspecial2Spec>) {
          return build_extraspecial(s.n, s.plus, cap);
        } else if constexpr (std::is_same_v<T, HeisenbergSpec>) {
          return build_heisenberg(s.p, s.n, cap);
        } else if constexpr (std::is_same_v<T, ElemAbSpec>) {
          return build_elemab(s.p, s.n);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return build_product(build_unchecked(*s.left, options), build_unchecked(*s.right, options), carrier);
        } else {
          return build_semidirect_spec(s, options, carrier);
        }
      },
      spec.node);
}

}  // namespace

GroupPtr build_group(const GroupSpec& spec, const BuildOptions& options) {
  const std::int64_t expected = expected_order(spec);
  if (expected > options.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded, to_string(spec) + " has order " + std::to_string(expected) +
                                                 " above the cap " + std::to_string(options.order_cap));
  }
  GroupPtr g = build_unchecked(spec, options);
  if (g->order() != expected) {
    throw std::logic_error(to_string(spec) + ": closure produced order " + std::to_string(g->order()) +
                           ", expected " + std::to_string(expected));
  }
  validate_group(*g);
  return g;
}

GroupPtr build_group(std::string_view spec_text, const BuildOptions& options) {
  return build_group(*parse_group_spec(spec_text), options);
}

std::vector<KernelAction> transitive_actions(const FiniteGroup& acting, const GroupSpec& kernel) {
  const KernelShape shape = kernel_shape(kernel);
  const auto auts = automorphisms(shape);
  const std::size_t s = acting.generators().size();
  double space = 1;
  for (std::size_t i = 0; i < s; ++i) space *= static_cast<double>(auts.size());
  if (space > 2e6) throw Error(ErrorCode::InvalidAction, "action search space too large; give the action explicitly");
  std::vector<KernelAction> out;
  std::vector<std::size_t> odometer(s, 0);
  while (true) {
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < s; ++i) images.push_back(auts[odometer[i]]);
    if (transitive_on_nonzero(images, shape)) {
      if (auto phi = extend_action(acting, images, shape)) out.push_back({images, action_kernel(*phi, shape)});
    }
    std::size_t pos = s;
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < auts.size()) break;
      odometer[pos] = 0;
      if (pos == 0) return out;
    }
    if (s == 0) return out;
  }
}

KernelAction make_action(const FiniteGroup& acting, const GroupSpec& kernel, std::vector<std::vector<int>> images) {
  const KernelShape shape = kernel_shape(kernel);
  if (images.size() != acting.generators().size()) {
    throw Error(ErrorCode::InvalidAction, "expected " + std::to_string(acting.generators().size()) +
                                              " generator images, got " + std::to_string(images.size()));
  }
  for (auto& m : images) {
    if (m.size() != static_cast<std::size_t>(shape.dim * shape.dim)) {
      throw Error(ErrorCode::InvalidAction, "generator image has the wrong size for the kernel");
    }
    for (auto& x : m) x = ((x % shape.modulus) + shape.modulus) % shape.modulus;
    if (!mat_invertible(m, shape)) throw Error(ErrorCode::InvalidAction, "generator image is not an automorphism");
  }
  const auto phi = extend_action(acting, images, shape);
  if (!phi) throw Error(ErrorCode::InvalidAction, "generator images do not define a homomorphism");
  for (int a = 0; a < acting.order(); ++a) {
    for (int b = 0; b < acting.order(); ++b) {
      if ((*phi)[static_cast<std::size_t>(acting.mul(a, b))] !=
          mat_mul((*phi)[static_cast<std::size_t>(a)], (*phi)[static_cast<std::size_t>(b)], shape)) {
        throw Error(ErrorCode::InvalidAction, "generator images do not define a homomorphism");
      }
    }
  }
  return {std::move(images), action_kernel(*phi, shape)};
}

// ---------------------------------------------------------------------------
// Conjugacy

int ConjugacyData::power_map(std::int64_t t, int k) const {
  std::int64_t r = t % exponent;
  if (r < 0) r += exponent;
  return power_maps[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
}

ConjugacyData conjugacy(const FiniteGroup& g) {
  const int n = g.order();
  ConjugacyData cd;
  cd.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (cd.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int k = static_cast<int>(cd.classes.size());
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      const int y = g.conjugate(x, h);
      if (cd.class_of[static_cast<std::size_t>(y)] < 0) {
        cd.class_of[static_cast<std::size_t>(y)] = k;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cd.representatives.push_back(x);
    cd.class_sizes.push_back(static_cast<int>(cls.size()));
    cd.class_orders.push_back(g.element_order(x));
    cd.classes.push_back(std::move(cls));
  }
  const int r = cd.num_classes();
  cd.exponent = 1;
  for (int k = 0; k < r; ++k) {
    cd.inverse_class.push_back(cd.class_of[static_cast<std::size_t>(g.inv(cd.representatives[static_cast<std::size_t>(k)]))]);
    cd.exponent = static_cast<int>(lcm(cd.exponent, cd.class_orders[static_cast<std::size_t>(k)]));
    if (cd.class_sizes[static_cast<std::size_t>(k)] == 1) cd.center.push_back(cd.representatives[static_cast<std::size_t>(k)]);
    std::vector<int> cent;
    const int x = cd.representatives[static_cast<std::size_t>(k)];
    for (int h = 0; h < n; ++h) {
      if (g.mul(x, h) == g.mul(h, x)) cent.push_back(h);
    }
    cd.centralizers.push_back(std::move(cent));
  }
  std::sort(cd.center.begin(), cd.center.end());
  cd.power_maps.assign(static_cast<std::size_t>(cd.exponent), std::vector<int>(static_cast<std::size_t>(r)));
  for (int k = 0; k < r; ++k) {
    const int x = cd.representatives[static_cast<std::size_t>(k)];
    int y = 0;
    for (int t = 0; t < cd.exponent; ++t) {
      cd.power_maps[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] = cd.class_of[static_cast<std::size_t>(y)];
      y = g.mul(y, x);
    }
  }
  return cd;
}

// ---------------------------------------------------------------------------
// Subgroups and quotients

namespace {

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  in[0] = 1;
  std::vector<int> members{0};
  for (int x = 1; x < g.order(); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    // Regenerate the span of gens by right multiplication.
    for (std::size_t q = 0; q < members.size(); ++q) {
      for (int s : gens) {
        const int y = g.mul(members[q], s);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), index_(static_cast<std::size_t>(parent_->order()), -1) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_[static_cast<std::size_t>(elements_[i])] = static_cast<int>(i);
  if (elements_.empty() || elements_[0] != 0) throw std::invalid_argument("Subgroup: identity missing");
  const int m = order();
  const auto um = static_cast<std::size_t>(m);
  std::vector<int> table(um * um);
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back(parent_->element_names()[static_cast<std::size_t>(elements_[static_cast<std::size_t>(i)])]);
    for (int j = 0; j < m; ++j) {
      const int prod = index_[static_cast<std::size_t>(parent_->mul(elements_[static_cast<std::size_t>(i)], elements_[static_cast<std::size_t>(j)]))];
      if (prod < 0) throw std::invalid_argument("Subgroup: element set is not closed");
      table[static_cast<std::size_t>(i) * um + static_cast<std::size_t>(j)] = prod;
    }
  }
  normal_ = true;
  for (int h : elements_) {
    for (int g = 0; g < parent_->order() && normal_; ++g) {
      if (index_[static_cast<std::size_t>(parent_->conjugate(h, g))] < 0) normal_ = false;
    }
    if (!normal_) break;
  }
  auto induced = std::make_shared<FiniteGroup>("sub(" + parent_->carrier() + ")", m, std::move(table), std::move(names),
                                               std::vector<int>{});
  auto gens = generating_set(*induced);
  induced_ = std::make_shared<FiniteGroup>(induced->carrier(), m,
                                           std::vector<int>(induced->table().begin(), induced->table().end()),
                                           induced->element_names(), std::move(gens));
}

Subgroup subgroup_from_elements(const GroupPtr& g, std::span<const int> elems) {
  std::vector<char> in(static_cast<std::size_t>(g->order()), 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<int> gens;
  for (int x : elems) {
    if (x != 0) gens.push_back(x);
  }
  for (std::size_t q = 0; q < members.size(); ++q) {
    for (int s : gens) {
      const int y = g->mul(members[q], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (!n.normal()) throw Error(ErrorCode::NotNormal, "subgroup is not normal in " + g->carrier());
  Quotient q;
  q.projection.assign(static_cast<std::size_t>(g->order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g->order(); ++x) {
    if (q.projection[static_cast<std::size_t>(x)] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : n.elements()) q.projection[static_cast<std::size_t>(g->mul(x, h))] = c;
  }
  const int m = static_cast<int>(reps.size());
  const auto um = static_cast<std::size_t>(m);
  std::vector<int> table(um * um);
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back(i == 0 ? "e" : "[" + g->element_names()[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] + "]");
    for (int j = 0; j < m; ++j) {
      table[static_cast<std::size_t>(i) * um + static_cast<std::size_t>(j)] =
          q.projection[static_cast<std::size_t>(g->mul(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]))];
    }
  }
  std::vector<int> gens;
  for (int x : g->generators()) {
    const int c = q.projection[static_cast<std::size_t>(x)];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  q.group = std::make_shared<FiniteGroup>(g->carrier() + "/N", m, std::move(table), std::move(names), std::move(gens));
  validate_group(*q.group);
  return q;
}

bool is_abelian(const FiniteGroup& g) {
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::vector<int> order_statistics(const FiniteGroup& g) {
  std::vector<int> stats(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int x = 0; x < g.order(); ++x) ++stats[static_cast<std::size_t>(g.element_order(x))];
  return stats;
}

std::vector<Subgroup> normal_subgroups_of_order(const GroupPtr& g, const ConjugacyData& cd, int order) {
  std::vector<Subgroup> out;
  if (order < 1 || g->order() % order != 0) return out;
  std::vector<int> chosen;
  const int r = cd.num_classes();
  auto closed = [&](const std::vector<char>& in) {
    for (int a = 0; a < g->order(); ++a) {
      if (!in[static_cast<std::size_t>(a)]) continue;
      for (int b = 0; b < g->order(); ++b) {
        if (in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(g->mul(a, b))]) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, int k, int remaining) -> void {
    if (remaining == 0) {
      std::vector<char> in(static_cast<std::size_t>(g->order()), 0);
      std::vector<int> elems{0};
      in[0] = 1;
      for (int c : chosen) {
        for (int x : cd.classes[static_cast<std::size_t>(c)]) {
          in[static_cast<std::size_t>(x)] = 1;
          elems.push_back(x);
        }
      }
      if (closed(in)) out.emplace_back(g, std::move(elems));
      return;
    }
    for (int c = k; c < r; ++c) {
      const int size = cd.class_sizes[static_cast<std::size_t>(c)];
      if (size > remaining) continue;
      chosen.push_back(c);
      self(self, c + 1, remaining - size);
      chosen.pop_back();
    }
  };
  search(search, 1, order - 1);
  return out;
}

}  // namespace mckay
