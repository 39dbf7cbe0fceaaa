#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mckay/character_table.hpp"
#include "mckay/int_matrix.hpp"

namespace mckay {

/// Vertex i is irreducible i of the table; adjacency(i, j) = dim Hom(chi_i (x) rho, chi_j).
struct McKayGraph {
  std::vector<std::int64_t> dims;
  IntMatrix adjacency;
  Character rho;
  int trivial_vertex = 0;
  bool undirected = false;
  bool loopless = false;
  bool simply_laced = false;

  int num_vertices() const { return static_cast<int>(dims.size()); }
};

McKayGraph build_mckay_graph(const CharacterTable& ct, const Character& rho);
McKayGraph build_mckay_graph(const CharacterTable& ct, const RhoSelector& sel);
/// Same graph from the table's values mod p. Multiplicities lie in
/// [0, deg chi_i deg rho], so this is exact whenever that bound is below p;
/// otherwise it defers to build_mckay_graph.
McKayGraph build_mckay_graph_modular(const CharacterTable& ct, const Character& rho);

/// chi(g^-1) as a character.
Character dual_character(const CharacterTable& ct, const Character& chi);

/// adjacency(Gamma(G, rho*)) == adjacency(Gamma(G, rho))^T.
bool dual_check(const CharacterTable& ct, const Character& rho);
bool dual_check(const CharacterTable& ct, const RhoSelector& sel);

struct Component {
  std::vector<int> vertices;
  IntMatrix adjacency;
  bool principal = false;
  int orbit = -1;  // index into ComponentDecomposition::orbits
};

/// A G-orbit on Irr(N): indices into the kernel's table and the common degree s.
struct KernelOrbit {
  std::vector<int> members;
  std::int64_t degree = 0;
};

struct ComponentDecomposition {
  std::vector<Component> components;  // ordered by least vertex; the principal one first
  std::shared_ptr<const Subgroup> kernel;
  std::shared_ptr<const CharacterTable> kernel_table;
  std::vector<KernelOrbit> orbits;
  std::vector<std::vector<std::int64_t>> restrictions;  // per vertex, multiplicities over Irr(N)
};

/// G-orbits on the irreducibles of a normal subgroup, under (g.tau)(x) = tau(g^-1 x g).
std::vector<KernelOrbit> conjugation_orbits(const CharacterTable& ct, const Subgroup& n, const CharacterTable& n_table);

/// Throws Error(OrbitMismatch) when components and orbits do not correspond.
ComponentDecomposition decompose_components(const McKayGraph& graph, const CharacterTable& ct);

/// The principal component is isomorphic to Gamma(G/N, rho), and so is every
/// component holding a 1-dimensional vertex. Isomorphisms respect vertex dimensions.
bool principal_component_isomorphism_check(const ComponentDecomposition& decomp, const McKayGraph& graph,
                                           const CharacterTable& ct);

}  // namespace mckay
