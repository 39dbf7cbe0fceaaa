#include "mckay/character_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "mckay/error.hpp"

namespace mckay {

std::vector<CycInt> Character::cyc_values() const {
  std::vector<CycInt> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_cyc());
  return out;
}

std::int64_t choose_prime(int exponent, int order) {
  const std::int64_t floor = 2 * static_cast<std::int64_t>(order);
  for (std::int64_t p = exponent + 1; p < (std::int64_t{1} << 31); p += exponent) {
    if (p > floor && is_prime(p)) return p;
  }
  throw Error(ErrorCode::NoSuitablePrime, "no prime = 1 mod " + std::to_string(exponent) + " below 2^31");
}

FpMatrix class_matrix(const FiniteGroup& g, const ConjugacyData& cd, int j) {
  const int r = cd.num_classes();
  FpMatrix m = FpMatrix::Zero(r, r);
  for (int k = 0; k < r; ++k) {
    const int z = cd.representatives[static_cast<std::size_t>(k)];
    for (int x : cd.classes[static_cast<std::size_t>(j)]) {
      const int y = g.mul(g.inv(x), z);
      m(cd.class_of[static_cast<std::size_t>(y)], k) += 1;
    }
  }
  return m;
}

namespace {

struct RawCharacter {
  std::int64_t degree;
  std::vector<std::int64_t> modular;
  std::vector<RootSum> values;
};

std::int64_t isqrt(std::int64_t n) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

// RootSum of order `from` whose exponents are multiples of from/to, rewritten in order `to`.
RootSum shrink_order(const RootSum& v, int to) {
  const int step = v.order() / to;
  std::vector<RootSum::Term> terms;
  for (const auto& [j, m] : v.terms()) {
    if (j % step != 0) throw std::logic_error("restriction produced a root outside the subgroup exponent");
    terms.emplace_back(j / step, m);
  }
  return RootSum(to, std::move(terms));
}

RootSum change_order(const RootSum& v, int to) {
  if (v.order() == to) return v;
  if (to % v.order() == 0) return v.embed(to);
  return shrink_order(v, to);
}

std::vector<std::int64_t> one_hot(int r, int i) {
  std::vector<std::int64_t> m(static_cast<std::size_t>(r), 0);
  m[static_cast<std::size_t>(i)] = 1;
  return m;
}

}  // namespace

CharacterTable compute_character_table(const GroupPtr& g) { return compute_character_table(g, conjugacy(*g)); }

CharacterTable compute_character_table(const GroupPtr& g, const ConjugacyData& cd) {
  const int n = g->order();
  const int r = cd.num_classes();
  const int e = cd.exponent;
  const std::int64_t p = choose_prime(e, n);
  const PrimeField f(p);

  const auto lines = fp_simultaneous_split(f, r, static_cast<std::size_t>(r - 1),
                                           [&](std::size_t idx) { return class_matrix(*g, cd, static_cast<int>(idx) + 1); });
  if (static_cast<int>(lines.size()) != r) throw Error(ErrorCode::SplitIncomplete, "wrong number of central characters");

  const std::int64_t xi = f.root_of_unity(e);
  const std::int64_t dmax = isqrt(n);
  std::vector<RawCharacter> raw;
  for (const auto& w : lines) {
    if (w(0) != 1) throw Error(ErrorCode::SplitIncomplete, "central character vanishes on the identity class");
    std::int64_t s = 0;
    for (int k = 0; k < r; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      s = f.add(s, f.mul(f.mul(w(k), w(cd.inverse_class[kk])), f.inv(cd.class_sizes[kk])));
    }
    if (s == 0) throw Error(ErrorCode::LiftOutOfRange, "degenerate central character");
    const std::int64_t target = f.mul(n, f.inv(s));
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= dmax; ++d) {
      if (f.mul(d, d) == target) {
        if (degree != 0) throw Error(ErrorCode::LiftOutOfRange, "degree is not unique");
        degree = d;
      }
    }
    if (degree == 0) throw Error(ErrorCode::LiftOutOfRange, "no degree d with d^2 = |G|/S");
    RawCharacter c;
    c.degree = degree;
    c.modular.resize(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
      c.modular[static_cast<std::size_t>(k)] = f.mul(degree, f.mul(w(k), f.inv(cd.class_sizes[static_cast<std::size_t>(k)])));
    }
    // Fourier inversion along the cyclic group generated by each representative.
    for (int k = 0; k < r; ++k) {
      const int o = cd.class_orders[static_cast<std::size_t>(k)];
      const std::int64_t xo = f.pow(xi, e / o);
      const std::int64_t o_inv = f.inv(o);
      std::vector<std::int64_t> chi_t(static_cast<std::size_t>(o));
      for (int t = 0; t < o; ++t) chi_t[static_cast<std::size_t>(t)] = c.modular[static_cast<std::size_t>(cd.power_map(t, k))];
      std::vector<RootSum::Term> terms;
      std::int64_t total = 0;
      for (int j = 0; j < o; ++j) {
        const std::int64_t step = f.pow(xo, -j);
        std::int64_t acc = 0;
        std::int64_t root = 1;
        for (int t = 0; t < o; ++t) {
          acc = f.add(acc, f.mul(chi_t[static_cast<std::size_t>(t)], root));
          root = f.mul(root, step);
        }
        const std::int64_t m = f.mul(acc, o_inv);
        if (m > degree) {
          throw Error(ErrorCode::LiftOutOfRange, "eigenvalue multiplicity " + std::to_string(m) + " exceeds degree");
        }
        if (m != 0) terms.emplace_back(j * (e / o), m);
        total += m;
      }
      if (total != degree) throw Error(ErrorCode::LiftOutOfRange, "eigenvalue multiplicities do not sum to the degree");
      c.values.emplace_back(e, std::move(terms));
    }
    raw.push_back(std::move(c));
  }
  std::sort(raw.begin(), raw.end(), [](const RawCharacter& a, const RawCharacter& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.modular < b.modular;
  });

  CharacterTable ct;
  ct.group = g;
  ct.classes = std::make_shared<const ConjugacyData>(cd);
  ct.r = r;
  ct.prime = p;
  ct.trivial_index = 0;
  for (int i = 0; i < r; ++i) {
    auto& c = raw[static_cast<std::size_t>(i)];
    ct.degrees.push_back(c.degree);
    std::vector<FpElem> mod;
    for (auto v : c.modular) mod.emplace_back(v, p);
    ct.modular_values.push_back(std::move(mod));
    Character chi{std::move(c.values), one_hot(r, i)};
    ct.values.push_back(chi.cyc_values());
    ct.irreducibles.push_back(std::move(chi));
  }
  const auto& triv = ct.irreducibles.front().values;
  if (ct.degrees.front() != 1 ||
      !std::all_of(triv.begin(), triv.end(), [e](const RootSum& v) { return v == RootSum(e, {{0, 1}}); })) {
    throw std::logic_error("first irreducible is not the trivial character");
  }
  return ct;
}

// ---------------------------------------------------------------------------
// Selectors

RhoSelector parse_rho_selector(std::string_view text) {
  auto fail = [&](const std::string& why) -> RhoSelector {
    throw Error(ErrorCode::ParseError, "rho selector '" + std::string(text) + "': " + why);
  };
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("expected an integer, got '" + std::string(s) + "'");
    return v;
  };
  if (text == "faithful-selfdual-min") return {FaithfulSelfDualMinDim{}};
  if (text.starts_with("irrep:")) {
    const auto v = parse_int(text.substr(6));
    if (v < 0 || v > 1000000) fail("irrep index out of range");
    return {IrrepSelector{static_cast<int>(v)}};
  }
  if (text.starts_with("charvec:")) {
    std::vector<std::int64_t> m;
    std::string_view rest = text.substr(8);
    while (true) {
      const auto comma = rest.find(',');
      const auto v = parse_int(rest.substr(0, comma));
      if (v < 0) fail("multiplicities must be nonnegative");
      m.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (std::all_of(m.begin(), m.end(), [](std::int64_t x) { return x == 0; })) fail("multiplicities are all zero");
    return {CharVectorSelector{std::move(m)}};
  }
  if (text.starts_with("pullback:")) {
    return {std::make_shared<const PullbackSelector>(PullbackSelector{parse_rho_selector(text.substr(9))})};
  }
  return fail("expected irrep:k, faithful-selfdual-min, charvec:m0,m1,... or pullback:<selector>");
}

std::string to_string(const RhoSelector& sel) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IrrepSelector>) {
          return "irrep:" + std::to_string(s.index);
        } else if constexpr (std::is_same_v<T, FaithfulSelfDualMinDim>) {
          return "faithful-selfdual-min";
        } else if constexpr (std::is_same_v<T, CharVectorSelector>) {
          std::string out = "charvec:";
          for (std::size_t i = 0; i < s.multiplicities.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s.multiplicities[i]);
          }
          return out;
        } else {
          return "pullback:" + to_string(s->inner);
        }
      },
      sel.kind);
}

Character character_from_multiplicities(const CharacterTable& ct, std::vector<std::int64_t> multiplicities) {
  if (static_cast<int>(multiplicities.size()) != ct.r) {
    throw Error(ErrorCode::NoSuchIrrep, "expected " + std::to_string(ct.r) + " multiplicities, got " +
                                            std::to_string(multiplicities.size()));
  }
  std::vector<RootSum> values(static_cast<std::size_t>(ct.r), RootSum(ct.exponent(), {}));
  for (int i = 0; i < ct.r; ++i) {
    const std::int64_t m = multiplicities[static_cast<std::size_t>(i)];
    if (m == 0) continue;
    for (int k = 0; k < ct.r; ++k) {
      values[static_cast<std::size_t>(k)] =
          values[static_cast<std::size_t>(k)] + ct.irreducible(i).values[static_cast<std::size_t>(k)].scaled(m);
    }
  }
  return {std::move(values), std::move(multiplicities)};
}

Character resolve_rho(const CharacterTable& ct, const RhoSelector& sel) {
  return std::visit(
      [&ct](const auto& s) -> Character {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IrrepSelector>) {
          if (s.index < 0 || s.index >= ct.r) {
            throw Error(ErrorCode::NoSuchIrrep, "irrep " + std::to_string(s.index) + " of " + std::to_string(ct.r));
          }
          return ct.irreducible(s.index);
        } else if constexpr (std::is_same_v<T, FaithfulSelfDualMinDim>) {
          int best = -1;
          for (int i = 0; i < ct.r; ++i) {
            const auto& chi = ct.irreducible(i);
            if (best >= 0 && ct.degrees[static_cast<std::size_t>(i)] >= ct.degrees[static_cast<std::size_t>(best)]) continue;
            if (is_self_dual(ct, chi) && is_faithful(ct, chi)) best = i;
          }
          if (best < 0) throw Error(ErrorCode::SelectorEmpty, "no faithful self-dual irreducible");
          return ct.irreducible(best);
        } else if constexpr (std::is_same_v<T, CharVectorSelector>) {
          if (std::all_of(s.multiplicities.begin(), s.multiplicities.end(), [](std::int64_t m) { return m == 0; })) {
            throw Error(ErrorCode::SelectorEmpty, "all multiplicities are zero");
          }
          if (std::any_of(s.multiplicities.begin(), s.multiplicities.end(), [](std::int64_t m) { return m < 0; })) {
            throw Error(ErrorCode::SelectorEmpty, "negative multiplicity");
          }
          return character_from_multiplicities(ct, s.multiplicities);
        } else {
          const auto& base = ct.group->base();
          if (!base) throw Error(ErrorCode::NoSuchIrrep, ct.group->carrier() + " has no base group to pull back from");
          const CharacterTable base_table = compute_character_table(base);
          return pullback(ct, base_table, resolve_rho(base_table, s->inner));
        }
      },
      sel.kind);
}

// ---------------------------------------------------------------------------
// Inner products

BigInt inner_product(const CharacterTable& ct, const std::vector<RootSum>& a, const std::vector<RootSum>& b) {
  const auto& cd = *ct.classes;
  RootAccumulator acc(ct.exponent());
  for (int k = 0; k < ct.r; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    acc.add_product(cd.class_sizes[kk], a[kk], b[static_cast<std::size_t>(cd.inverse_class[kk])]);
  }
  const auto total = acc.as_integer();
  if (!total || *total % ct.group->order() != 0) {
    throw Error(ErrorCode::InternalNonInteger, "inner product is not an integer");
  }
  return *total / ct.group->order();
}

std::vector<std::int64_t> decompose(const CharacterTable& ct, const std::vector<RootSum>& values) {
  std::vector<std::int64_t> m;
  m.reserve(static_cast<std::size_t>(ct.r));
  for (int i = 0; i < ct.r; ++i) m.push_back(static_cast<std::int64_t>(inner_product(ct, values, ct.irreducible(i).values)));
  return m;
}

std::int64_t tensor_multiplicity(const CharacterTable& ct, int i, const Character& rho, int j) {
  const auto& cd = *ct.classes;
  RootAccumulator acc(ct.exponent());
  const auto& chi_i = ct.irreducible(i).values;
  const auto& chi_j = ct.irreducible(j).values;
  for (int k = 0; k < ct.r; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    acc.add_product(cd.class_sizes[kk], chi_i[kk], rho.values[kk], chi_j[static_cast<std::size_t>(cd.inverse_class[kk])]);
  }
  const auto total = acc.as_integer();
  if (!total || *total % ct.group->order() != 0 || *total < 0) {
    throw Error(ErrorCode::InternalNonInteger, "tensor multiplicity is not a nonnegative integer");
  }
  return static_cast<std::int64_t>(*total / ct.group->order());
}

// ---------------------------------------------------------------------------
// Kernels, restriction, duality

Subgroup kernel_of_character(const CharacterTable& ct, const Character& chi) {
  const auto& cd = *ct.classes;
  const CycInt degree(chi.degree());
  std::vector<int> elems;
  for (int k = 0; k < ct.r; ++k) {
    if (chi.values[static_cast<std::size_t>(k)].to_cyc() == degree) {
      const auto& cls = cd.classes[static_cast<std::size_t>(k)];
      elems.insert(elems.end(), cls.begin(), cls.end());
    }
  }
  return Subgroup(ct.group, std::move(elems));
}

Character restrict_character(const CharacterTable& ct, const Character& chi, const Subgroup& sub,
                             const CharacterTable& sub_table) {
  const auto& cd = *ct.classes;
  const auto& sub_cd = *sub_table.classes;
  std::vector<RootSum> values;
  values.reserve(static_cast<std::size_t>(sub_table.r));
  for (int c = 0; c < sub_table.r; ++c) {
    const int parent = sub.to_parent(sub_cd.representatives[static_cast<std::size_t>(c)]);
    const auto& v = chi.values[static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(parent)])];
    values.push_back(change_order(v, sub_table.exponent()));
  }
  auto m = decompose(sub_table, values);
  return {std::move(values), std::move(m)};
}

std::vector<std::int64_t> restriction_multiplicities(const CharacterTable& ct, const Subgroup& sub,
                                                     const CharacterTable& sub_table, int i) {
  return restrict_character(ct, ct.irreducible(i), sub, sub_table).multiplicities;
}

Character pullback(const CharacterTable& ct, const CharacterTable& base_table, const Character& chi) {
  const auto& cd = *ct.classes;
  const auto& base_cd = *base_table.classes;
  std::vector<RootSum> values;
  for (int k = 0; k < ct.r; ++k) {
    const int b = ct.group->to_base(cd.representatives[static_cast<std::size_t>(k)]);
    values.push_back(change_order(chi.values[static_cast<std::size_t>(base_cd.class_of[static_cast<std::size_t>(b)])], ct.exponent()));
  }
  auto m = decompose(ct, values);
  return {std::move(values), std::move(m)};
}

bool is_self_dual(const CharacterTable& ct, const Character& chi) {
  for (int k = 0; k < ct.r; ++k) {
    const CycInt v = chi.values[static_cast<std::size_t>(k)].to_cyc();
    if (!(v.galois_inverse() == v)) return false;
  }
  return true;
}

bool is_faithful(const CharacterTable& ct, const Character& chi) { return kernel_of_character(ct, chi).order() == 1; }

bool is_irreducible(const Character& chi) {
  std::int64_t total = 0;
  for (auto m : chi.multiplicities) total += m;
  return total == 1;
}

}  // namespace mckay
