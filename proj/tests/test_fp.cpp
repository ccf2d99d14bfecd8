#include "doctest.h"
#include "hopf/fp.hpp"

using namespace hopf;

TEST_CASE("find_prime returns the smallest prime = 1 mod m above the bound") {
  CHECK(find_prime(3, 9) == 13);
  CHECK(find_prime(4, 16) == 17);
  CHECK(find_prime(1, 1) == 2);
  CHECK(find_prime(6, 36) == 37);
  CHECK(find_prime(6, 1296) == 1297);
  CHECK(find_prime(5, 625) == 631);
}

TEST_CASE("primitive roots of unity") {
  CHECK(primitive_root_of_unity(5, 2) == 4);
  CHECK(primitive_root_of_unity(13, 3) == 3);
  CHECK(primitive_root_of_unity(7, 1) == 1);
  CHECK_THROWS_AS(primitive_root_of_unity(7, 4), ConfigError);

  for (std::uint64_t m : {1, 2, 3, 4, 6, 12}) {
    PrimeField F(13, m, 0);
    Fe eps = F.epsilon();
    for (std::uint64_t j = 1; j < m; ++j) CHECK(F.pow(eps, j) != 1);
    CHECK(F.pow(eps, m) == 1);
  }
}

TEST_CASE("field arithmetic") {
  PrimeField F(97, 3, 0);
  CHECK(F.add(96, 5) == 4);
  CHECK(F.sub(3, 5) == 95);
  CHECK(F.mul(50, 2) == 3);
  CHECK(F.mul(F.inv(42), 42) == 1);
  CHECK(F.from_int(-1) == 96);
  CHECK(F.from_int(97) == 0);
  CHECK(F.pow(F.epsilon(), 3) == 1);
  CHECK(F.eps_pow(-1) == F.inv(F.epsilon()));
  CHECK_THROWS(F.inv(0));
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(PrimeField(15, 1, 0), ConfigError);  // not prime
  CHECK_THROWS_AS(PrimeField(13, 5, 0), ConfigError);  // 5 does not divide 12
}

TEST_CASE("seeded rng reproducibility") {
  PrimeField F(631, 5, 0);
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.field_elt(F) == b.field_elt(F));
  Rng c = a.fork(7), d = b.fork(7);
  for (int i = 0; i < 10; ++i) CHECK(c.bits() == d.bits());
  CHECK(Rng(1).bits() != Rng(2).bits());
}
