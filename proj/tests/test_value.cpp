#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <vector>

#include "lfdl/value.hpp"
#include "support/random_instances.hpp"

using lfdl::Value;

TEST_CASE("values compare within and across kinds") {
  REQUIRE(Value::integer(1) < Value::integer(4));
  REQUIRE(Value::integer(-5) < Value::integer(0));
  REQUIRE(Value::symbol("a") < Value::symbol("b"));
  REQUIRE(Value::symbol("ab") < Value::symbol("b"));
  REQUIRE(Value::symbol("a") < Value::symbol("aa"));

  // every integer precedes every symbol
  REQUIRE(Value::integer(1'000'000) < Value::symbol("a"));
  REQUIRE_FALSE(Value::symbol("0") < Value::integer(0));
}

TEST_CASE("interning the same text twice yields equal values") {
  REQUIRE(Value::symbol("foo") == Value::symbol("foo"));
  REQUIRE(Value::symbol("foo") != Value::symbol("bar"));
  REQUIRE(Value::integer(3) != Value::symbol("3"));

  // interning order must not change comparison results
  Value zebra = Value::symbol("zebra_unseen_before");
  Value apple = Value::symbol("apple_unseen_before");
  REQUIRE(apple < zebra);
}

TEST_CASE("value ordering is a strict total order") {
  std::mt19937_64 rng(20250901);
  for (int trial = 0; trial < 2000; ++trial) {
    const Value a = lfdl::testing::random_value(rng, 20, true);
    const Value b = lfdl::testing::random_value(rng, 20, true);
    const Value c = lfdl::testing::random_value(rng, 20, true);

    // totality: exactly one of <, ==, > holds
    const int rel = a < b ? -1 : (b < a ? 1 : 0);
    REQUIRE((rel == 0) == (a == b));

    // antisymmetry
    if (a < b) REQUIRE_FALSE(b < a);

    // transitivity
    if (a < b && b < c) REQUIRE(a < c);
  }
}

TEST_CASE("values print as their surface form") {
  std::ostringstream os;
  os << Value::integer(-7) << " " << Value::symbol("hello");
  REQUIRE(os.str() == "-7 hello");
}
