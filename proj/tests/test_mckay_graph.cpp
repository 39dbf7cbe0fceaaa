#include <doctest.h>

#include "mckay/graph_iso.hpp"
#include "mckay/mckay_graph.hpp"
#include "mckay/shapes.hpp"
#include "oracle.hpp"

using namespace mckay;

namespace {

McKayGraph graph(const char* spec, const char* sel) {
  const auto t = compute_character_table(build_group(spec));
  return build_mckay_graph(t, parse_rho_selector(sel));
}

}  // namespace

TEST_CASE("sign character of C_2 gives one edge") {
  const auto g = graph("cyclic:2", "irrep:1");
  IntMatrix want(2, 2);
  want << 0, 1, 1, 0;
  CHECK(g.adjacency == want);
  CHECK(g.undirected);
  CHECK(g.loopless);
}

TEST_CASE("a faithful character of C_n gives a directed cycle") {
  for (int n = 3; n <= 9; ++n) {
    const std::string spec = "cyclic:" + std::to_string(n);
    const auto t = compute_character_table(build_group(spec));
    // The irreducible whose value at the generator is zeta_n.
    int faithful = -1;
    for (int i = 0; i < t.r; ++i) {
      if (is_faithful(t, t.irreducible(i))) faithful = i;
    }
    REQUIRE(faithful >= 0);
    const auto g = build_mckay_graph(t, t.irreducible(faithful));
    CHECK_FALSE(g.undirected);
    CHECK(g.adjacency.rowwise().sum() == IntVector::Ones(n));
    CHECK(g.adjacency.colwise().sum().transpose() == IntVector::Ones(n));
    CHECK(strong_components(g.adjacency).size() == 1);
    CHECK(circuit_count(g.adjacency, n) == n);
    for (int k = 1; k < n; ++k) CHECK(circuit_count(g.adjacency, k) == 0);
  }
}

TEST_CASE("reduced regular representation of Z/n gives the complete graph") {
  for (int n = 3; n <= 7; ++n) {
    std::string sel = "charvec:0";
    for (int i = 1; i < n; ++i) sel += ",1";
    const auto g = graph(("cyclic:" + std::to_string(n)).c_str(), sel.c_str());
    CHECK(g.undirected);
    CHECK(g.loopless);
    CHECK(g.adjacency == IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n));
  }
}

TEST_CASE("Dih_4 gives a four-spined star") {
  const auto g = graph("dihedral:4", "faithful-selfdual-min");
  CHECK(g.dims == std::vector<std::int64_t>{1, 1, 1, 1, 2});
  CHECK(isomorphic(g.adjacency, hedgehog(4)));
}

TEST_CASE("S_3 with its reflection representation") {
  const auto g = graph("dihedral:3", "irrep:2");
  IntMatrix want(3, 3);
  want << 0, 0, 1, 0, 0, 1, 1, 1, 1;
  CHECK(g.adjacency == want);
  CHECK(g.undirected);
  CHECK_FALSE(g.loopless);
}

TEST_CASE("graph invariants on the oracle fixtures") {
  for (const auto& row : oracle()) {
    const std::string name = row["name"];
    if (row["order"].get<int>() > 128) continue;
    CAPTURE(name);
    const auto t = compute_character_table(build_group(name));
    const Character rho = resolve_rho(t, parse_rho_selector("faithful-selfdual-min"));
    const auto g = build_mckay_graph(t, rho);
    IntVector d(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) d(i) = g.dims[static_cast<std::size_t>(i)];
    CHECK(g.adjacency * d == rho.degree() * d);
    CHECK(g.undirected == is_symmetric(g.adjacency));
    CHECK(g.adjacency.trace() == row["power_sums"][0].get<std::int64_t>());
    CHECK(build_mckay_graph_modular(t, rho).adjacency == g.adjacency);
    CHECK(dual_check(t, rho));
  }
}

TEST_CASE("modular builder agrees on directed and reducible graphs") {
  for (const char* spec : {"cyclic:7", "heis:3:1", "semidirect(cyclic:4,cyclic:5)", "binary:O"}) {
    CAPTURE(spec);
    const auto t = compute_character_table(build_group(spec));
    for (int i = 0; i < t.r; ++i) {
      CHECK(build_mckay_graph_modular(t, t.irreducible(i)).adjacency == build_mckay_graph(t, t.irreducible(i)).adjacency);
    }
    std::vector<std::int64_t> all(static_cast<std::size_t>(t.r), 1);
    const auto rho = character_from_multiplicities(t, all);
    CHECK(build_mckay_graph_modular(t, rho).adjacency == build_mckay_graph(t, rho).adjacency);
  }
}

TEST_CASE("dual graph of C_5 is the reversed cycle") {
  const auto t = compute_character_table(build_group("cyclic:5"));
  const Character rho = t.irreducible(1);
  const auto g = build_mckay_graph(t, rho);
  const auto d = build_mckay_graph(t, dual_character(t, rho));
  CHECK(d.adjacency == g.adjacency.transpose());
  CHECK(d.adjacency != g.adjacency);
}

TEST_CASE("components of BT x C_3 are three copies of E6") {
  const auto t = compute_character_table(build_group("product(binary:T,cyclic:3)"));
  const auto g = build_mckay_graph(t, parse_rho_selector("pullback:faithful-selfdual-min"));
  const auto decomp = decompose_components(g, t);
  REQUIRE(decomp.components.size() == 3);
  CHECK(decomp.kernel->order() == 3);
  CHECK(decomp.components[0].principal);
  for (const auto& c : decomp.components) CHECK(classify_component(c.adjacency).to_string() == "E~6");
  CHECK(principal_component_isomorphism_check(decomp, g, t));
}

TEST_CASE("orbits of BO on Irr(C_3)") {
  const auto t = compute_character_table(build_group("semidirect(binary:O,cyclic:3)"));
  const auto g = build_mckay_graph(t, parse_rho_selector("pullback:faithful-selfdual-min"));
  const auto decomp = decompose_components(g, t);
  REQUIRE(decomp.orbits.size() == 2);
  CHECK(decomp.orbits[0].members.size() == 1);
  CHECK(decomp.orbits[1].members.size() == 2);
  CHECK(principal_component_isomorphism_check(decomp, g, t));
}

TEST_CASE("principal component of Dih_8 x| C_3") {
  const auto t = compute_character_table(build_group("semidirect(dihedral:8,cyclic:3)"));
  const auto g = build_mckay_graph(t, parse_rho_selector("pullback:faithful-selfdual-min"));
  const auto decomp = decompose_components(g, t);
  CHECK(decomp.components.size() == 2);
  CHECK(principal_component_isomorphism_check(decomp, g, t));
  const auto dih = graph("dihedral:8", "faithful-selfdual-min");
  CHECK(isomorphic(decomp.components[0].adjacency, dih.adjacency));
}
