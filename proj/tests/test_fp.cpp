#include <catch2/catch_amalgamated.hpp>

#include <fptate/fptate.hpp>

using namespace fptate;

TEST_CASE("prime field arithmetic is exact") {
  PrimeField f(5);
  CHECK(f.p() == 5);
  CHECK(f.reduce(-1) == 4);
  CHECK(f.reduce(12) == 2);
  CHECK(f.reduce(-13) == 2);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK(f.neg(2) == 3);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(3, 4) == 2);
}

TEST_CASE("inverses multiply to one") {
  PrimeField f(97);
  for (std::uint32_t a = 1; a < 97; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("inverse of zero is rejected") {
  PrimeField f(3);
  CHECK_THROWS_MATCHES(f.inv(0), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::precondition; }));
}

TEST_CASE("non-primes are rejected") {
  for (std::uint32_t n : {0u, 1u, 4u, 6u, 9u, 91u}) {
    CHECK_THROWS_MATCHES(PrimeField(n), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::non_prime; }));
  }
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(3));
  CHECK_NOTHROW(PrimeField(101));
}

TEST_CASE("field equality compares the characteristic") {
  CHECK(PrimeField(5) == PrimeField(5));
  CHECK(PrimeField(5) != PrimeField(7));
}
