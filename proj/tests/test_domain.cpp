#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "lfdl/domain.hpp"
#include "support/random_instances.hpp"

using lfdl::Domain;
using lfdl::DomainStore;
using lfdl::Value;
using lfdl::VarId;

namespace {

Domain ints(std::initializer_list<int64_t> vs) {
  std::vector<Value> values;
  for (int64_t v : vs) values.push_back(Value::integer(v));
  return Domain::of(std::move(values));
}

std::vector<int64_t> as_ints(const Domain& d) {
  std::vector<int64_t> out;
  for (const Value& v : d.values()) out.push_back(v.as_int());
  return out;
}

// Reference semantics: keep exactly the elements >= t.
Domain filter_at_least(const Domain& d, const Value& t) {
  std::vector<Value> keep;
  for (const Value& v : d.values())
    if (!(v < t)) keep.push_back(v);
  return Domain::of(std::move(keep));
}

}  // namespace

TEST_CASE("lower_bound returns the minimum") {
  REQUIRE(ints({3, 4, 7, 10}).lower_bound() == Value::integer(3));
  REQUIRE(ints({5}).lower_bound() == Value::integer(5));
  REQUIRE(ints({1, 4, 7, 10, 11}).lower_bound() == Value::integer(1));
}

TEST_CASE("raise_lower_bound removes everything below the threshold") {
  REQUIRE(as_ints(ints({1, 2, 3, 4, 9, 10, 11}).raise_lower_bound(Value::integer(3))) ==
          std::vector<int64_t>{3, 4, 9, 10, 11});
  REQUIRE(as_ints(ints({1, 4, 7, 10, 11}).raise_lower_bound(Value::integer(4))) ==
          std::vector<int64_t>{4, 7, 10, 11});
  REQUIRE(ints({1, 3}).raise_lower_bound(Value::integer(5)).empty());
}

TEST_CASE("raise_lower_bound equals the filter oracle and is idempotent") {
  std::mt19937_64 rng(20250902);
  for (int trial = 0; trial < 500; ++trial) {
    const Domain d = lfdl::testing::random_domain(rng, 12, 20, true);
    const Value t = lfdl::testing::random_value(rng, 20, true);
    const Domain raised = d.raise_lower_bound(t);
    REQUIRE(raised == filter_at_least(d, t));
    REQUIRE(raised.raise_lower_bound(t) == raised);
  }
}

TEST_CASE("remove_lower_bound drops exactly the minimum") {
  REQUIRE(as_ints(ints({4, 9, 10, 11}).remove_lower_bound()) ==
          std::vector<int64_t>{9, 10, 11});
  REQUIRE(ints({5}).remove_lower_bound().empty());

  // drop-min on {4,7,10}, cross-checked against erase-front on the raw list
  const Domain d = ints({4, 7, 10});
  std::vector<Value> expect(d.values().begin(), d.values().end());
  expect.erase(expect.begin());
  REQUIRE(d.remove_lower_bound() == Domain::of(expect));
}

TEST_CASE("empty domain is representable and detected by the store") {
  const Domain empty;
  REQUIRE(empty.empty());
  REQUIRE(empty.size() == 0);

  DomainStore store({ints({1, 2}), Domain()});
  REQUIRE(store.is_false());
  store.set_domain(VarId{1}, ints({7}));
  REQUIRE_FALSE(store.is_false());
}

TEST_CASE("store solvedness is equal lower bounds, not singletons") {
  DomainStore store({ints({4, 9, 10, 11}), ints({4, 7, 10}), ints({4, 7, 10, 11})});
  REQUIRE(store.lower_bounds_equal());
  REQUIRE_FALSE(store.all_singleton());

  DomainStore unequal({ints({4}), ints({5})});
  REQUIRE_FALSE(unequal.lower_bounds_equal());
}

TEST_CASE("domains are immutable views; snapshots survive shrinking") {
  const Domain original = ints({1, 2, 3});
  const Domain snapshot = original;
  const Domain raised = original.raise_lower_bound(Value::integer(3));
  REQUIRE(as_ints(snapshot) == std::vector<int64_t>{1, 2, 3});
  REQUIRE(as_ints(raised) == std::vector<int64_t>{3});
}
