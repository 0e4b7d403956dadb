#include <catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

using namespace lpa;
using Q = RationalField;

TEST_CASE("expressions reduce to normal forms", "[expression]") {
  auto a = Algebra<Q>::create(fixtures::rose(2), Q{});
  CHECK(parse_element(a, "y1* y1").to_string() == "v");
  CHECK(parse_element(a, "v - y1 y1* - y2 y2*").to_string() == "0");
  CHECK(parse_element(a, "2/3 v + 1/3 v").to_string() == "v");
  CHECK(parse_element(a, "y1 y1*").to_string() == "v - y2 y2*");
  CHECK(parse_element(a, "-y2*").to_string() == "-y2*");
  CHECK(parse_element(a, "3 * y1 y2*") == parse_element(a, "3 y1 y2*"));
  CHECK(parse_element(a, "y1 *") == a->ghost("y1"));
  CHECK(parse_element(a, "v*") == a->vertex("v"));
  CHECK(parse_element(a, "2") == a->one().scaled(Q{}.from_int(2)));
  CHECK(parse_element(a, "1/2 y1 - 1/2 y1").is_zero());
}

TEST_CASE("expression errors report positions", "[expression]") {
  auto a = Algebra<Q>::create(fixtures::rose(2), Q{});
  CHECK_THROWS_AS(parse_element(a, ""), ParseError);
  CHECK_THROWS_AS(parse_element(a, "y1 +"), ParseError);
  CHECK_THROWS_AS(parse_element(a, "y1 # y2"), ParseError);
  CHECK_THROWS_AS(parse_element(a, "1/0 v"), ParseError);
  CHECK_THROWS_AS(parse_element(a, "y3"), UnknownIdError);
  try {
    parse_element(a, "v + ) y1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == 5);
  }
}

TEST_CASE("expressions over prime fields", "[expression]") {
  auto a = Algebra<PrimeField>::create(fixtures::rose(2), PrimeField(7));
  CHECK(parse_element(a, "3 y1 y1* + 2").to_string() == "5 v + 4 y2 y2*");
  CHECK(parse_element(a, "1/2 v + 1/2 v").to_string() == "v");
  CHECK_THROWS_AS(parse_element(a, "1/7 v"), ParseError);
}

TEST_CASE("printed elements parse back to themselves", "[expression][property]") {
  gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Graph g = gen::random_graph(rng, 4, 6);
    auto a = Algebra<Q>::create(g, Q{});
    auto x = gen::random_element(a, rng);
    CHECK(parse_element(a, x.to_string()) == x);
  }
}
