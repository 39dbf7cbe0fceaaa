#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/int_matrix.hpp"

namespace mckay {

enum class ShapeKind { AffineA, AffineD, AffineE, Hedgehog, DihedralOddTail, Other };

/// Shape of a connected graph. n is the rank for AffineA/AffineD/AffineE, the
/// spine count for Hedgehog and the vertex count for DihedralOddTail.
struct ShapeLabel {
  ShapeKind kind = ShapeKind::Other;
  int n = 0;
  bool hedgehog_alias = false;       // AffineD(4) is also the hedgehog with four spines
  std::optional<int> dynkin_order;   // |G'_T| of the matching binary dihedral / polyhedral group
  std::vector<std::int64_t> marking;  // positive marking per vertex for AffineD/AffineE, else empty

  bool is_dynkin() const { return kind == ShapeKind::AffineD || kind == ShapeKind::AffineE; }
  std::string to_string() const;
  friend bool operator==(const ShapeLabel& a, const ShapeLabel& b) { return a.kind == b.kind && a.n == b.n; }
};

ShapeLabel classify_component(const IntMatrix& adj);

/// Vertex sets of the connected components of the underlying undirected graph,
/// ordered by least vertex.
std::vector<std::vector<int>> weak_components(const IntMatrix& adj);
/// Strongly connected components, ordered by least vertex.
std::vector<std::vector<int>> strong_components(const IntMatrix& adj);
IntMatrix induced_subgraph(const IntMatrix& adj, const std::vector<int>& vertices);

std::int64_t undirected_edge_count(const IntMatrix& adj);
bool is_forest(const IntMatrix& adj);
bool is_tree(const IntMatrix& adj);

/// 0/1 color per vertex, or nothing when the graph has an odd circuit or a loop.
std::optional<std::vector<int>> bipartition(const IntMatrix& adj);

/// tr(A^k): closed walks of length k.
BigInt circuit_count(const IntMatrix& adj, int k);

struct PfCheck {
  bool pass = false;
  std::optional<std::int64_t> a;  // deg = a * marking, when the component has a Dynkin label
};

/// A deg = radius deg exactly, plus the marking proportionality for Dynkin components.
PfCheck pf_integer_vector_check(const IntMatrix& adj, const std::vector<std::int64_t>& degrees, std::int64_t radius);

// Template graphs.
IntMatrix affine_a(int n);
IntMatrix affine_d(int n);
IntMatrix affine_e(int n);
IntMatrix hedgehog(int spines);
IntMatrix dihedral_odd_tail(int vertices);
/// Tree from a parent array (parent[0] ignored).
IntMatrix tree_from_parents(const std::vector<int>& parent);

}  // namespace mckay
