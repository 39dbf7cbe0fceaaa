#include <doctest.h>

#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "oracle.hpp"

using namespace mckay;

TEST_CASE("spec grammar round-trips") {
  for (const char* text : {"cyclic:6", "dihedral:8", "bindihedral:4", "binary:I", "extraspecial:-:2", "heis:3:1",
                           "elemab:2:3", "product(binary:T,cyclic:3)", "semidirect(binary:O,cyclic:3)",
                           "semidirect(dihedral:8,cyclic:3,[2;1])", "semidirect(binary:T,elemab:2:2,[1.0.0.1;1.0.0.1;0.1.1.1])"}) {
    CAPTURE(text);
    CHECK(to_string(*parse_group_spec(text)) == text);
  }
}

TEST_CASE("spec parse errors") {
  for (const char* text : {"", "cyclic:0", "dihedral:1", "binary:X", "heis:4:1", "elemab:2:0", "product(cyclic:2)",
                           "semidirect(cyclic:2,cyclic:3,[1;2", "nosuch:3"}) {
    const std::string shown = text;
    CAPTURE(shown);
    CHECK_THROWS_AS(parse_group_spec(text), Error);
  }
}

TEST_CASE("order cap and invalid actions") {
  BuildOptions o;
  o.order_cap = 100;
  try {
    build_group("binary:I", o);
    FAIL("expected OrderCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderCapExceeded);
  }
  try {
    build_group("semidirect(cyclic:2,cyclic:5,[3])");
    FAIL("expected InvalidAction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidAction);
  }
}

TEST_CASE("orders, classes and centers match the matrix-group oracle") {
  for (const auto& row : oracle()) {
    const std::string name = row["name"];
    CAPTURE(name);
    const GroupPtr g = build_group(name);
    const ConjugacyData cd = conjugacy(*g);
    CHECK(g->order() == row["order"].get<int>());
    CHECK(cd.num_classes() == row["classes"].get<int>());
    CHECK(static_cast<int>(cd.center.size()) == row["center"].get<int>());
  }
}

TEST_CASE("class data invariants") {
  for (const char* spec : {"dihedral:5", "binary:O", "heis:3:1", "semidirect(binary:T,elemab:2:2)"}) {
    CAPTURE(spec);
    const GroupPtr g = build_group(spec);
    const ConjugacyData cd = conjugacy(*g);
    int total = 0;
    for (int k = 0; k < cd.num_classes(); ++k) {
      const auto kk = static_cast<std::size_t>(k);
      total += cd.class_sizes[kk];
      CHECK(cd.class_sizes[kk] * static_cast<int>(cd.centralizers[kk].size()) == g->order());
      CHECK(cd.inverse_class[static_cast<std::size_t>(cd.inverse_class[kk])] == k);
      CHECK(cd.power_map(1, k) == k);
    }
    CHECK(total == g->order());
    CHECK(cd.classes[0] == std::vector<int>{0});
  }
}

TEST_CASE("products and semidirect products") {
  const GroupPtr p = build_group("product(dihedral:3,cyclic:2)");
  CHECK(p->order() == 12);
  REQUIRE(p->base());
  CHECK(p->base()->order() == 6);
  CHECK(p->base_kernel().size() == 2);
  const GroupPtr s = build_group("semidirect(cyclic:3,elemab:2:2)");
  CHECK(s->order() == 12);
  CHECK_FALSE(is_abelian(*s));
  CHECK(conjugacy(*s).num_classes() == 4);  // A_4
  const GroupPtr h = build_group("heis:3:1");
  CHECK(h->order() == 27);
  CHECK(conjugacy(*h).center.size() == 3);
}

TEST_CASE("subgroups and quotients") {
  const GroupPtr bo = build_group("binary:O");
  const ConjugacyData cd = conjugacy(*bo);
  const auto bt = normal_subgroups_of_order(bo, cd, 24);
  REQUIRE(bt.size() == 1);
  CHECK(bt[0].normal());
  const Quotient q = quotient_group(bo, bt[0]);
  CHECK(q.group->order() == 2);
  const std::vector<int> one = {1};
  const Subgroup c = subgroup_from_elements(bo, one);
  CHECK(bo->order() % c.order() == 0);
  const GroupPtr s3 = build_group("dihedral:3");
  const std::vector<int> refl = {s3->generators()[1]};
  const Subgroup r = subgroup_from_elements(s3, refl);
  CHECK(r.order() == 2);
  CHECK_FALSE(r.normal());
  CHECK_THROWS_AS(quotient_group(s3, r), Error);
}

TEST_CASE("transitive actions") {
  const GroupPtr bo = build_group("binary:O");
  const auto actions = transitive_actions(*bo, *parse_group_spec("elemab:2:2"));
  REQUIRE_FALSE(actions.empty());
  for (const auto& a : actions) CHECK(a.kernel.size() == 8);
  const GroupPtr c3 = build_group("cyclic:3");
  CHECK(transitive_actions(*c3, *parse_group_spec("cyclic:5")).empty());
}
