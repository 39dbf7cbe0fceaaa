#include <doctest.h>

#include <random>

#include "mckay/cyclotomic.hpp"

using namespace mckay;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p = cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(std::count(p.begin(), p.end(), BigInt(-2)) == 2);
  CHECK(euler_phi(60) == 16);
}

TEST_CASE("roots of unity") {
  const CycInt z3 = CycInt::root_of_unity(3, 1);
  CHECK(z3 + z3 * z3 == CycInt(-1));
  CHECK(CycInt::root_of_unity(4, 1) * CycInt::root_of_unity(4, 1) == CycInt(-1));
  CHECK(CycInt::root_of_unity(6, 3) == CycInt(-1));
  CHECK(CycInt::root_of_unity(5, -1) == CycInt::root_of_unity(5, 4));
  // zeta_4 and zeta_8^2 are the same number written at different orders.
  CHECK(CycInt::root_of_unity(4, 1) == CycInt::root_of_unity(8, 2));
  CHECK(CycInt::root_of_unity(8, 2).embed(24) == CycInt::root_of_unity(24, 6));
}

TEST_CASE("galois action and integrality") {
  const CycInt z5 = CycInt::root_of_unity(5, 1);
  const CycInt trace = z5 + z5.galois(2) + z5.galois(3) + z5.galois(4);
  CHECK(trace.as_integer() == BigInt(-1));
  CHECK_FALSE(z5.as_integer().has_value());
  CHECK((z5 * z5.galois_inverse()).as_integer() == BigInt(1));
  CHECK(CycInt(7).to_string() == "7");
}

TEST_CASE("group ring sums") {
  const RootSum a(6, {{0, 1}, {3, 1}});  // 1 + (-1)
  CHECK(a.weight() == 2);
  CHECK(a.to_cyc().is_zero());
  const RootSum b(6, {{1, 2}});
  CHECK((a * b).weight() == 4);
  CHECK((a + b).weight() == 4);
  CHECK(b.conjugate() == RootSum(6, {{5, 2}}));
  CHECK(b.power_map(3) == RootSum(6, {{3, 2}}));
  CHECK(b.embed(12) == RootSum(12, {{2, 2}}));
}

TEST_CASE("accumulator fast path agrees with the exact reduction") {
  std::mt19937_64 rng(7);
  for (int e : {1, 2, 6, 12, 30, 60, 105, 210, 254}) {
    for (int trial = 0; trial < 50; ++trial) {
      RootAccumulator acc(e);
      // Rational integers built as sums over full Galois orbits plus noise half the time.
      std::uniform_int_distribution<int> coeff(-1000, 1000);
      for (int j = 0; j < e; ++j) acc.add(j, trial % 2 == 0 ? 5 : coeff(rng));
      acc.add(0, coeff(rng));
      CHECK(acc.as_integer() == acc.to_cyc().as_integer());
    }
  }
}
