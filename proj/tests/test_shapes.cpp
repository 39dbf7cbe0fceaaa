#include <doctest.h>

#include <random>

#include "mckay/graph_iso.hpp"
#include "mckay/shapes.hpp"
#include "mckay/verify.hpp"

using namespace mckay;

namespace {

std::int64_t marking_square_sum(const ShapeLabel& l) {
  std::int64_t s = 0;
  for (auto d : l.marking) s += d * d;
  return s;
}

bool is_template(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  if (isomorphic(a, hedgehog(n - 1))) return true;
  if (n >= 5 && isomorphic(a, affine_d(n - 1))) return true;
  for (int e : {6, 7, 8}) {
    if (n == e + 1 && isomorphic(a, affine_e(e))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("template graphs classify as themselves") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    const auto l = classify_component(affine_a(n));
    CHECK(l.kind == ShapeKind::AffineA);
    CHECK(l.n == n);
  }
  CHECK(classify_component(affine_a(1)).to_string() == "A~1");
  for (int n = 4; n <= 14; ++n) {
    CAPTURE(n);
    const auto l = classify_component(affine_d(n));
    CHECK(l.kind == ShapeKind::AffineD);
    CHECK(l.n == n);
    CHECK(l.dynkin_order == 4 * (n - 2));
    CHECK(marking_square_sum(l) == 4 * (n - 2));
    CHECK(l.hedgehog_alias == (n == 4));
  }
  for (int n : {6, 7, 8}) {
    const auto l = classify_component(affine_e(n));
    CHECK(l.kind == ShapeKind::AffineE);
    CHECK(l.n == n);
    CHECK(marking_square_sum(l) == *l.dynkin_order);
  }
  CHECK(classify_component(affine_e(6)).dynkin_order == 24);
  CHECK(classify_component(affine_e(7)).dynkin_order == 48);
  CHECK(classify_component(affine_e(8)).dynkin_order == 120);
  for (int m : {1, 2, 3, 5, 16, 64}) CHECK(classify_component(hedgehog(m)).to_string() == "Hedgehog(" + std::to_string(m) + ")");
  for (int v = 3; v <= 7; ++v) CHECK(classify_component(dihedral_odd_tail(v)).to_string() == "DihedralOddTail(" + std::to_string(v) + ")");
}

TEST_CASE("random non-template trees are Other") {
  std::mt19937_64 rng(1234);
  int checked = 0;
  while (checked < 1000) {
    std::uniform_int_distribution<int> size(5, 16);
    const int n = size(rng);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int v = 1; v < n; ++v) parent[static_cast<std::size_t>(v)] = std::uniform_int_distribution<int>(0, v - 1)(rng);
    const IntMatrix a = tree_from_parents(parent);
    if (is_template(a)) continue;
    CHECK(classify_component(a).kind == ShapeKind::Other);
    ++checked;
  }
}

TEST_CASE("forests and trees") {
  CHECK(is_tree(IntMatrix::Zero(1, 1)));
  CHECK(is_tree(affine_e(8)));
  CHECK_FALSE(is_tree(affine_a(4)));
  CHECK_FALSE(is_forest(dihedral_odd_tail(4)));
  IntMatrix two = IntMatrix::Zero(4, 4);
  two(0, 1) = two(1, 0) = two(2, 3) = two(3, 2) = 1;
  CHECK(is_forest(two));
  CHECK_FALSE(is_tree(two));
  IntMatrix doubled = IntMatrix::Zero(2, 2);
  doubled(0, 1) = doubled(1, 0) = 2;
  CHECK_FALSE(is_forest(doubled));
  IntMatrix directed = IntMatrix::Zero(2, 2);
  directed(0, 1) = 1;
  CHECK_FALSE(is_forest(directed));
}

TEST_CASE("bipartitions and circuits") {
  CHECK(bipartition(affine_a(5)).has_value());  // six-cycle
  CHECK_FALSE(bipartition(affine_a(2)).has_value());
  const auto star = bipartition(hedgehog(4));
  REQUIRE(star);
  CHECK((*star)[0] != (*star)[1]);
  CHECK((*star)[1] == (*star)[2]);
  IntMatrix edge = IntMatrix::Zero(2, 2);
  edge(0, 1) = edge(1, 0) = 1;
  CHECK(circuit_count(edge, 2) == 2);
  CHECK(circuit_count(hedgehog(4), 2) == 8);
  for (int k = 1; k <= 9; k += 2) CHECK(circuit_count(affine_e(7), k) == 0);
}

TEST_CASE("integer Perron-Frobenius vectors") {
  const IntMatrix e6 = affine_e(6);
  const auto marking = classify_component(e6).marking;
  auto pf = pf_integer_vector_check(e6, marking, 2);
  CHECK(pf.pass);
  CHECK(pf.a == 1);
  std::vector<std::int64_t> star = {6, 3, 3, 3, 3};
  pf = pf_integer_vector_check(hedgehog(4), star, 2);
  CHECK(pf.pass);
  CHECK(pf.a == 3);
  pf = pf_integer_vector_check(IntMatrix::Zero(1, 1), {1}, 0);
  CHECK(pf.pass);
  CHECK_FALSE(pf_integer_vector_check(hedgehog(4), {2, 1, 1, 1, 2}, 2).pass);
}

TEST_CASE("unlabeled tree enumeration") {
  const std::vector<std::size_t> counts = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(unlabeled_trees(n).size() == counts[static_cast<std::size_t>(n - 1)]);
  // Pairwise non-isomorphic.
  const auto nine = unlabeled_trees(9);
  for (std::size_t i = 0; i < nine.size(); ++i) {
    for (std::size_t j = i + 1; j < nine.size(); ++j) CHECK_FALSE(isomorphic(tree_from_parents(nine[i]), tree_from_parents(nine[j])));
  }
}

TEST_CASE("isomorphism respects colors") {
  const IntMatrix a = affine_d(5);
  CHECK(isomorphic(a, a));
  std::vector<std::int64_t> c1 = {1, 2, 3, 4, 5, 6}, c2 = {6, 5, 4, 3, 2, 1};
  CHECK_FALSE(isomorphic(a, a, c1, c2));
  CHECK_FALSE(isomorphic(affine_d(6), affine_e(6)));
}
