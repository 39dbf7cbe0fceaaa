#include <doctest.h>

#include "mckay/prime_field.hpp"

using namespace mckay;

TEST_CASE("primes and roots") {
  CHECK(is_prime(2));
  CHECK(is_prime(769));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  const PrimeField f(13);
  CHECK(f.primitive_root() == 2);
  CHECK(f.pow(f.root_of_unity(6), 6) == 1);
  CHECK(f.pow(f.root_of_unity(6), 3) == 12);
  CHECK(f.mul(f.inv(5), 5) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("kernels and characteristic polynomials") {
  const PrimeField f(7);
  FpMatrix m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 0, 0, 1;
  const FpMatrix k = kernel_basis(f, m);
  REQUIRE(k.cols() == 1);
  CHECK(fp_reduce(f, m * k).isZero());
  FpMatrix d(2, 2);
  d << 2, 0, 0, 5;
  const auto roots = polynomial_roots(f, characteristic_polynomial(f, d));
  CHECK(roots.size() == 2);
}
