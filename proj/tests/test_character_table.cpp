#include <doctest.h>

#include "mckay/character_table.hpp"
#include "mckay/error.hpp"
#include "oracle.hpp"

using namespace mckay;

namespace {

CharacterTable table(const char* spec) { return compute_character_table(build_group(spec)); }

}  // namespace

TEST_CASE("prime choice") {
  CHECK(choose_prime(6, 6) == 13);
  CHECK(choose_prime(4, 8) == 17);
  CHECK(choose_prime(60, 120) == 241);
}

TEST_CASE("degrees") {
  CHECK(table("dihedral:3").degrees == std::vector<std::int64_t>{1, 1, 2});
  CHECK(table("bindihedral:2").degrees == std::vector<std::int64_t>{1, 1, 1, 1, 2});
  CHECK(table("binary:T").degrees == std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(table("binary:O").degrees == std::vector<std::int64_t>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(table("binary:I").degrees == std::vector<std::int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  const auto e = table("extraspecial:-:2");
  CHECK(e.degrees.back() == 4);
  CHECK(std::count(e.degrees.begin(), e.degrees.end(), 1) == 16);
}

TEST_CASE("values of small tables") {
  const auto c3 = table("cyclic:3");
  REQUIRE(c3.r == 3);
  CHECK(c3.trivial_index == 0);
  for (int i = 0; i < 3; ++i) {
    for (const auto& v : c3.values[static_cast<std::size_t>(i)]) CHECK((v * v * v) == CycInt(1));
  }
  const auto s3 = table("dihedral:3");
  // Classes e, r, s; the 2-dimensional character is (2, -1, 0).
  CHECK(s3.values[2][0] == CycInt(2));
  CHECK(s3.values[2][1] == CycInt(-1));
  CHECK(s3.values[2][2] == CycInt(0));
  CHECK(s3.values[1][2] == CycInt(-1));
}

TEST_CASE("burnside and orthogonality on the oracle fixtures") {
  for (const auto& row : oracle()) {
    const std::string name = row["name"];
    if (row["order"].get<int>() > 128) continue;
    CAPTURE(name);
    const auto t = compute_character_table(build_group(name));
    std::int64_t squares = 0;
    for (auto d : t.degrees) squares += d * d;
    CHECK(squares == t.group->order());
    for (int i = 0; i < t.r; ++i) {
      for (int j = 0; j < t.r; ++j) {
        CHECK(inner_product(t, t.irreducible(i).values, t.irreducible(j).values) == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("selectors") {
  const auto t = table("binary:T");
  const Character rho = resolve_rho(t, parse_rho_selector("faithful-selfdual-min"));
  CHECK(rho.degree() == 2);
  CHECK(is_faithful(t, rho));
  CHECK(is_self_dual(t, rho));
  CHECK(is_irreducible(rho));
  CHECK(resolve_rho(t, parse_rho_selector("irrep:6")).degree() == 3);
  CHECK(resolve_rho(t, parse_rho_selector("charvec:1,0,0,0,0,0,1")).degree() == 4);
  CHECK_FALSE(is_irreducible(resolve_rho(t, parse_rho_selector("charvec:1,0,0,0,0,0,1"))));
  CHECK(to_string(parse_rho_selector("pullback:irrep:2")) == "pullback:irrep:2");
  try {
    resolve_rho(t, parse_rho_selector("irrep:7"));
    FAIL("expected NoSuchIrrep");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSuchIrrep);
  }
  try {
    resolve_rho(table("cyclic:3"), parse_rho_selector("faithful-selfdual-min"));
    FAIL("expected SelectorEmpty");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelectorEmpty);
  }
  CHECK_THROWS_AS(parse_rho_selector("irrep:-1"), Error);
  CHECK_THROWS_AS(parse_rho_selector("charvec:"), Error);
}

TEST_CASE("kernels, duality and pullbacks") {
  const auto c5 = table("cyclic:5");
  CHECK_FALSE(is_self_dual(c5, c5.irreducible(1)));
  CHECK(is_faithful(c5, c5.irreducible(1)));
  const auto s3 = table("dihedral:3");
  CHECK(kernel_of_character(s3, s3.irreducible(1)).order() == 3);
  CHECK(kernel_of_character(s3, s3.irreducible(0)).order() == 6);
  const auto p = table("product(binary:T,cyclic:3)");
  const Character rho = resolve_rho(p, parse_rho_selector("pullback:faithful-selfdual-min"));
  CHECK(rho.degree() == 2);
  CHECK(kernel_of_character(p, rho).order() == 3);
  CHECK(is_irreducible(rho));
}

TEST_CASE("restriction") {
  const GroupPtr bo = build_group("binary:O");
  const auto t = compute_character_table(bo);
  const auto bt = normal_subgroups_of_order(bo, *t.classes, 24);
  REQUIRE(bt.size() == 1);
  const auto st = compute_character_table(bt[0].induced());
  // The 4-dimensional irreducible of BO restricts to the sum of BT's two
  // conjugate 2-dimensional non-self-dual irreducibles.
  const auto m = restriction_multiplicities(t, bt[0], st, 7);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += m[i] * st.degrees[i];
  CHECK(total == 4);
  CHECK(std::count(m.begin(), m.end(), 1) == 2);
}
