#include <catch_amalgamated.hpp>

#include <random>

#include "lpa/field.hpp"

using namespace lpa;

TEST_CASE("rational scalars are exact and print in lowest terms", "[field]") {
  RationalField q;
  auto a = q.from_string("2", "3") + q.from_string("1", "3");
  CHECK(a == q.one());
  CHECK(RationalField::to_string(q.from_string("4", "6")) == "2/3");
  CHECK(RationalField::to_fraction(q.from_int(5)) == "5/1");
  CHECK(RationalField::to_fraction(q.from_int(-5)) == "-5/1");
  CHECK(RationalField::inverse(q.from_string("-3", "7")) == q.from_string("-7", "3"));
  CHECK_THROWS(RationalField::inverse(q.zero()));
  CHECK_THROWS_AS(q.from_string("1", "0"), ParseError);
}

TEST_CASE("prime field arithmetic", "[field]") {
  PrimeField f(7);
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.from_string("1", "3") * f.from_int(3) == f.one());
  CHECK_THROWS_AS(f.from_string("1", "7"), ParseError);
  CHECK_THROWS_AS(PrimeField(8), ParseError);
  CHECK_THROWS_AS(PrimeField(2147483659u), ParseError);
  CHECK_NOTHROW(PrimeField(2147483647u));
  CHECK(f.name() == "fp:7");
  CHECK_THROWS_AS(f.one() + PrimeField(5).one(), AlgebraError);
}

TEST_CASE("prime field inverses against brute force", "[field][property]") {
  for (std::uint32_t p : {2u, 3u, 5u, 101u, 65521u}) {
    PrimeField f(p);
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 200); ++a) {
      auto inv = PrimeField::inverse(f.from_int(a));
      CHECK((std::uint64_t{inv.value()} * a) % p == 1);
    }
  }
}

TEST_CASE("large prime multiplication does not overflow", "[field]") {
  PrimeField f(2147483647u);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t a = rng() % 2147483647u, b = rng() % 2147483647u;
    auto prod = f.from_int(static_cast<long long>(a)) * f.from_int(static_cast<long long>(b));
    CHECK(prod.value() == (a * b) % 2147483647u);
  }
}
