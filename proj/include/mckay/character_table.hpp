#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/group.hpp"
#include "mckay/prime_field.hpp"

namespace mckay {

/// A character as a class function. Each value is the multiset of eigenvalues
/// (roots of unity of order exponent) of a representing matrix.
struct Character {
  std::vector<RootSum> values;               // per class
  std::vector<std::int64_t> multiplicities;  // per irreducible of the table it was resolved against

  std::int64_t degree() const { return values.empty() ? 0 : values.front().weight(); }
  std::vector<CycInt> cyc_values() const;
};

struct CharacterTable {
  GroupPtr group;
  std::shared_ptr<const ConjugacyData> classes;
  int r = 0;
  std::int64_t prime = 0;
  int trivial_index = 0;
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<CycInt>> values;         // [irreducible][class]
  std::vector<std::vector<FpElem>> modular_values;  // [irreducible][class]
  std::vector<Character> irreducibles;

  int exponent() const { return classes->exponent; }
  const Character& irreducible(int i) const { return irreducibles[static_cast<std::size_t>(i)]; }
};

/// Smallest prime p = 1 (mod exponent) with p > 2 |G|. Throws Error(NoSuitablePrime).
std::int64_t choose_prime(int exponent, int order);

/// Exact character table by splitting the class algebra over F_p and lifting
/// through the power maps. Irreducibles are sorted by degree, then by their
/// modular values, which puts the trivial character first.
CharacterTable compute_character_table(const GroupPtr& g, const ConjugacyData& cd);
CharacterTable compute_character_table(const GroupPtr& g);

/// (M_j)_{ik} = #{(x, y) in C_j x C_i : xy = z_k}.
FpMatrix class_matrix(const FiniteGroup& g, const ConjugacyData& cd, int j);

struct IrrepSelector {
  int index;
};
struct FaithfulSelfDualMinDim {};
struct CharVectorSelector {
  std::vector<std::int64_t> multiplicities;
};
struct PullbackSelector;

/// Irrep:k | FaithfulSelfDualMinDim | CharVector(m_0, ..., m_{r-1}); Pullback
/// inflates a selector of the base group (first factor or acting group).
struct RhoSelector {
  std::variant<IrrepSelector, FaithfulSelfDualMinDim, CharVectorSelector, std::shared_ptr<const PullbackSelector>> kind;
};
struct PullbackSelector {
  RhoSelector inner;
};

/// `irrep:k`, `faithful-selfdual-min`, `charvec:m0,m1,...`, `pullback:<selector>`.
RhoSelector parse_rho_selector(std::string_view text);
std::string to_string(const RhoSelector& sel);

/// Throws Error(NoSuchIrrep) or Error(SelectorEmpty).
Character resolve_rho(const CharacterTable& ct, const RhoSelector& sel);

/// Sum of m_i chi_i.
Character character_from_multiplicities(const CharacterTable& ct, std::vector<std::int64_t> multiplicities);
/// Multiplicities of the irreducibles in a class function (exact inner products).
std::vector<std::int64_t> decompose(const CharacterTable& ct, const std::vector<RootSum>& values);

/// <a, b> = (1/|G|) sum_k h_k a(g_k) b(g_k^-1). Throws Error(InternalNonInteger).
BigInt inner_product(const CharacterTable& ct, const std::vector<RootSum>& a, const std::vector<RootSum>& b);

/// dim Hom(chi_i (x) rho, chi_j). Throws Error(InternalNonInteger).
std::int64_t tensor_multiplicity(const CharacterTable& ct, int i, const Character& rho, int j);

/// Classes where chi takes the value chi(1).
Subgroup kernel_of_character(const CharacterTable& ct, const Character& chi);

/// chi restricted to sub, decomposed against sub_table (a table of sub.induced()).
Character restrict_character(const CharacterTable& ct, const Character& chi, const Subgroup& sub,
                             const CharacterTable& sub_table);
std::vector<std::int64_t> restriction_multiplicities(const CharacterTable& ct, const Subgroup& sub,
                                                     const CharacterTable& sub_table, int i);

/// Values of a base-group character composed with the projection g -> base.
Character pullback(const CharacterTable& ct, const CharacterTable& base_table, const Character& chi);

bool is_self_dual(const CharacterTable& ct, const Character& chi);
bool is_faithful(const CharacterTable& ct, const Character& chi);
bool is_irreducible(const Character& chi);

}  // namespace mckay
