#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mckay {

struct GroupSpec;
using GroupSpecPtr = std::shared_ptr<const GroupSpec>;

enum class BinaryKind { T, O, I };

struct CyclicSpec {
  int n;
};
/// Symmetries of a regular n-gon, order 2n.
struct DihedralSpec {
  int n;
};
/// Dicyclic group of order 4n.
struct BinaryDihedralSpec {
  int n;
};
struct BinaryPolySpec {
  BinaryKind kind;
};
/// Extraspecial 2-group of order 2^(1+2n): central product of n copies of Dih_4,
/// with one copy replaced by Q_8 for the minus variant.
struct Extraspecial2Spec {
  int n;
  bool plus;
};
/// Heis(F_p^n), order p^(1+2n).
struct HeisenbergSpec {
  int p;
  int n;
};
/// F_p^n.
struct ElemAbSpec {
  int p;
  int n;
};
struct ProductSpec {
  GroupSpecPtr left;
  GroupSpecPtr right;
};
/// K x| G where G acts on the abelian kernel K (cyclic:m or elemab:p:n).
///
/// action, when present, lists one automorphism per generator of G: a unit mod m
/// for a cyclic kernel, or a row-major n x n matrix over F_p for elemab.
/// When absent, an action transitive on the nonzero elements of K is searched for.
struct SemidirectSpec {
  GroupSpecPtr acting;
  GroupSpecPtr kernel;
  std::optional<std::vector<std::vector<int>>> action;
};

struct GroupSpec {
  std::variant<CyclicSpec, DihedralSpec, BinaryDihedralSpec, BinaryPolySpec, Extraspecial2Spec, HeisenbergSpec,
               ElemAbSpec, ProductSpec, SemidirectSpec>
      node;
};

GroupSpecPtr make_spec(GroupSpec spec);

/// Parses the grammar `cyclic:6`, `dihedral:8`, `bindihedral:4`, `binary:T|O|I`,
/// `extraspecial:+|-:n`, `heis:p:n`, `elemab:p:n`, `product(A,B)`,
/// `semidirect(G,K)` and `semidirect(G,K,[a;b;...])` where each action entry is a
/// '.'-separated list of integers. Throws Error(ParseError).
GroupSpecPtr parse_group_spec(std::string_view text);

/// Canonical text form; parse_group_spec(to_string(s)) reproduces s.
std::string to_string(const GroupSpec& spec);

}  // namespace mckay
