#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "mckay/error.hpp"
#include "mckay/shapes.hpp"
#include "mckay/verify.hpp"
#include "oracle.hpp"

using namespace mckay;

namespace {

std::vector<std::int64_t> numbers(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string cur;
  for (char c : text + " ") {
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && cur.empty())) {
      cur += c;
    } else if (!cur.empty() && cur != "-") {
      out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur.clear();
    }
  }
  return out;
}

}  // namespace

TEST_CASE("trace identity on S_3") {
  const auto f = make_fixture("dihedral:3", "faithful-selfdual-min");
  const auto r = verify_trace_identity(f, 3);
  CHECK(r.pass);
  CHECK(r.expected == "1 5 7");
  CHECK(r.observed == "1/1 5/5 7/7");
}

TEST_CASE("edge count identity") {
  const auto q8 = verify_edge_count_identity(make_fixture("bindihedral:2", "faithful-selfdual-min"));
  CHECK(q8.pass);
  CHECK(q8.expected == "8 tree:8");
  const auto bt = verify_edge_count_identity(make_fixture("binary:T", "faithful-selfdual-min"));
  CHECK(bt.pass);
  CHECK(bt.observed == "12/12");
  CHECK_THROWS_AS(verify_edge_count_identity(make_fixture("dihedral:3", "faithful-selfdual-min")), Error);
}

TEST_CASE("power sums and centralizer algebras agree with the matrix oracle") {
  for (const auto& entry : oracle()) {
    const std::string name = entry["name"];
    CAPTURE(name);
    const auto f = make_fixture(name, "faithful-selfdual-min");
    REQUIRE(f.group->order() == entry["order"].get<int>());
    CHECK(f.graph.dims[0] == 1);
    CHECK(f.rho.degree() == entry["degree"].get<std::int64_t>());
    const auto& sums = entry["power_sums"];
    for (std::size_t k = 1; k <= sums.size(); ++k) {
      CHECK(circuit_count(f.graph.adjacency, static_cast<int>(k)) == BigInt(sums[k - 1].get<std::int64_t>()));
    }
    CHECK(verify_trace_identity(f, static_cast<int>(sums.size())).pass);
    if (is_tree(f.graph.adjacency)) {
      const auto r = verify_centralizer_endo(f);
      CHECK(r.pass);
      auto got = numbers(r.observed);
      std::sort(got.begin(), got.end());
      CHECK(got == entry["centralizer_endo_sorted"].get<std::vector<std::int64_t>>());
    } else {
      CHECK_THROWS_AS(verify_centralizer_endo(f), Error);
    }
    CHECK(circuit_count(f.graph.adjacency, 2) == BigInt(entry["centralizer_endo_sum"].get<std::int64_t>()));
  }
}

TEST_CASE("tree and forest theorems on the witnesses") {
  for (const char* spec : {"binary:T", "binary:O", "binary:I", "bindihedral:4", "extraspecial:-:2"}) {
    CAPTURE(spec);
    const auto f = make_fixture(spec, "faithful-selfdual-min");
    CHECK(verify_tree_theorem(f).pass);
    CHECK(verify_forest_theorem(f).pass);
    CHECK(verify_bipartite_criterion(f).pass);
  }
  CHECK_THROWS_AS(verify_tree_theorem(make_fixture("dihedral:5", "faithful-selfdual-min")), Error);
}

TEST_CASE("the F_2^2 extension of BT") {
  const Construction c{"binary:T", "bindihedral:2", "elemab:2:2"};
  const auto data = prepare_construction(c);
  CHECK(data.h->order() == 8);
  const auto f = make_fixture(data.spec, "pullback:faithful-selfdual-min");
  CHECK(f.group->order() == 96);
  const auto parts = weak_components(f.graph.adjacency);
  REQUIRE(parts.size() == 2);
  const IntMatrix other = induced_subgraph(f.graph.adjacency, parts[1]);
  const auto label = classify_component(other);
  CHECK(label.to_string() == "D~4");
  std::vector<std::int64_t> degrees;
  std::int64_t squares = 0;
  for (int v : parts[1]) {
    degrees.push_back(f.graph.dims[static_cast<std::size_t>(v)]);
    squares += degrees.back() * degrees.back();
  }
  CHECK(squares == 72);
  const auto pf = pf_integer_vector_check(other, degrees, 2);
  CHECK(pf.pass);
  CHECK(pf.a == 3);
  const auto decomp = decompose_components(f.graph, *f.table);
  CHECK(verify_sum_of_squares(f, decomp).pass);
  CHECK(verify_construction(c).pass);
}

TEST_CASE("normal tower in BO") {
  const auto r = verify_normal_tower();
  CHECK(r.pass);
}

TEST_CASE("property checks") {
  CHECK(property_ring_axioms(200, 7).pass);
  CHECK(property_graph_aux(8).pass);
}

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "all") != names.end());
  CHECK_THROWS_AS(run_suite("nonsense"), Error);
}

TEST_CASE("catalog respects the order cap") {
  for (const auto& spec : catalog(64)) {
    CAPTURE(spec);
    BuildOptions o;
    o.order_cap = 64;
    CHECK(build_group(spec, o)->order() <= 64);
  }
}
