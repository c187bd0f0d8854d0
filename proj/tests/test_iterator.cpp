#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <vector>

#include "lfdl/iterator.hpp"
#include "support/iterator_conformance.hpp"

using lfdl::CountingIterator;
using lfdl::Domain;
using lfdl::DomainIterator;
using lfdl::Value;

namespace {

Domain ints(std::initializer_list<int64_t> vs) {
  std::vector<Value> values;
  for (int64_t v : vs) values.push_back(Value::integer(v));
  return Domain::of(std::move(values));
}

}  // namespace

TEST_CASE("domain iterator meets the linear iterator contract") {
  lfdl::testing::check_linear_iterator_conformance([](const std::vector<Value>& keys) {
    return std::make_unique<DomainIterator>(Domain::of(keys));
  });
}

TEST_CASE("seek lands on the least key at or above the target") {
  DomainIterator it(ints({1, 4, 7, 10, 11}));
  REQUIRE(it.key() == Value::integer(1));
  it.seek(Value::integer(4));
  REQUIRE(it.key() == Value::integer(4));
  it.seek(Value::integer(4));  // seek to the current key is the identity
  REQUIRE(it.key() == Value::integer(4));
}

TEST_CASE("seek past every remaining key exhausts the iterator") {
  const int64_t k = 1000;
  DomainIterator it(Domain::int_range(1, k));

  // oracle: no element of {1..k} is >= k+1
  bool any = false;
  for (const Value& v : it.remaining())
    if (!(v < Value::integer(k + 1))) any = true;
  REQUIRE_FALSE(any);

  it.seek(Value::integer(k + 1));
  REQUIRE(it.at_end());
}

TEST_CASE("seek agrees with raise_lower_bound on the same domain") {
  const Domain d = ints({2, 3, 5, 8, 13, 21});
  for (int64_t t = 0; t <= 22; ++t) {
    DomainIterator it(d);
    it.seek(Value::integer(t));
    const Domain raised = d.raise_lower_bound(Value::integer(t));
    if (raised.empty()) {
      REQUIRE(it.at_end());
    } else {
      REQUIRE(it.key() == raised.lower_bound());
    }
  }
}

TEST_CASE("counting wrapper tallies operations") {
  DomainIterator inner(ints({1, 2, 3, 4, 5}));
  CountingIterator::Counters counters;
  CountingIterator it(inner, counters);
  it.seek(Value::integer(3));
  it.next();
  it.seek(Value::integer(5));
  REQUIRE(counters.seeks == 2);
  REQUIRE(counters.nexts == 1);
  REQUIRE(it.key() == Value::integer(5));
}
