#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mckay/character_table.hpp"
#include "mckay/mckay_graph.hpp"
#include "mckay/shapes.hpp"

namespace mckay {

struct CheckRecord {
  std::string id;
  std::string anchor;  // the statement being checked
  std::string inputs;
  std::string expected;
  std::string observed;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> records;

  bool pass() const;
  int failures() const;
};

/// Everything a check needs about one (G, rho) pair.
struct Fixture {
  std::string spec;
  std::string selector;
  GroupPtr group;
  std::shared_ptr<const CharacterTable> table;
  Character rho;
  McKayGraph graph;
};

Fixture make_fixture(const std::string& spec, const std::string& selector, const BuildOptions& options = {});
/// Same table, different rho.
Fixture with_rho(const Fixture& base, const Character& rho, const std::string& selector);

std::string describe(const Fixture& f);

/// sum over classes of rho(g)^k, tr(A^k) and a closed-walk count agree for k = 1..kmax.
CheckRecord verify_trace_identity(const Fixture& f, int kmax);
/// sum rho(x)^2 = 2 #edges = sum over classes of dim End_{C(x)}(rho). Throws Error(PreconditionViolated).
CheckRecord verify_edge_count_identity(const Fixture& f);
/// dim End_{C(x)}(rho) is 1 at central classes and 2 elsewhere. Throws Error(PreconditionViolated).
CheckRecord verify_centralizer_endo(const Fixture& f);
/// Per component: sum deg^2 = |G/N| s^2 |T|.
CheckRecord verify_sum_of_squares(const Fixture& f, const ComponentDecomposition& decomp);
/// |Z| <= 2 and bipartite iff |Z| = 2. Throws Error(PreconditionViolated).
CheckRecord verify_bipartite_criterion(const Fixture& f);
/// A tree graph comes from an ADE pair or an extraspecial witness. Throws
/// Error(PreconditionViolated); a violation is a failed record whose observed
/// text starts with "ClassificationViolated".
CheckRecord verify_tree_theorem(const Fixture& f);
/// Same contract for forests.
CheckRecord verify_forest_theorem(const Fixture& f);

/// One kernel spec, for the C_p or F_p^n constructions.
struct Construction {
  std::string group;       // G
  std::string subgroup;    // spec whose invariants identify H inside G
  std::string kernel;      // cyclic:p or elemab:p:n
};

/// Builds G' = K x| G with action kernel H and compares Gamma(G', pullback rho)
/// with Gamma(G, rho) + Gamma(H, rho|H). Throws Error(PreconditionViolated).
CheckRecord verify_construction(const Construction& c);

/// Builds the semidirect product used by verify_construction.
struct ConstructionData {
  GroupPtr base;
  std::shared_ptr<const Subgroup> h;
  std::string spec;  // explicit-action spec of G'
};
ConstructionData prepare_construction(const Construction& c);

/// BDih_2 and BT inside BO: normality and the quotients C_2, S_3, C_3.
/// Throws Error(SubgroupNotFound).
CheckRecord verify_normal_tower();

CheckRecord verify_shape(const Fixture& f, const ShapeLabel& expected);
CheckRecord verify_spectrum(const Fixture& f);
CheckRecord verify_dual(const Fixture& f);
CheckRecord verify_principal_component(const Fixture& f);
CheckRecord verify_frobenius_perron(const Fixture& f);
/// Character orthogonality, both relations, exactly.
CheckRecord verify_orthogonality(const Fixture& f);

// Suites.

struct SuiteOptions {
  int jobs = 1;
  BuildOptions build;
};

const std::vector<std::string>& suite_names();
/// trees | forests | identities | sweep | all. Throws Error(ParseError) otherwise.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Group specs of the desk-scale catalog (order <= max_order).
std::vector<std::string> catalog(int max_order);
/// Tree and forest theorems over every self-dual irreducible rho of every catalog group.
VerificationReport run_sweep(int max_order, const SuiteOptions& options = {});

// Property checks.

/// Ring axioms of Z[zeta_e] on random triples.
CheckRecord property_ring_axioms(int triples, std::uint64_t seed);
/// A tree in which exactly one vertex is adjacent to leaves is a star, for
/// every unlabeled tree with at most max_vertices vertices.
CheckRecord property_graph_aux(int max_vertices);
/// Unlabeled trees on n vertices, one per isomorphism class, as parent arrays.
std::vector<std::vector<int>> unlabeled_trees(int n);

}  // namespace mckay
