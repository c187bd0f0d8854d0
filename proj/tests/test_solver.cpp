#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>
#include <vector>

#include "lfdl/solver.hpp"
#include "support/random_instances.hpp"

using lfdl::AllEqual;
using lfdl::ChoiceConstraint;
using lfdl::Domain;
using lfdl::DomainStore;
using lfdl::Propagator;
using lfdl::PropagatorPtr;
using lfdl::Value;
using lfdl::VarId;

namespace {

Domain ints(std::initializer_list<int64_t> vs) {
  std::vector<Value> values;
  for (int64_t v : vs) values.push_back(Value::integer(v));
  return Domain::of(std::move(values));
}

DomainStore example_store() {
  return DomainStore({ints({1, 2, 3, 4, 9, 10, 11}), ints({3, 4, 7, 10}),
                      ints({1, 4, 7, 10, 11})});
}

PropagatorPtr all_equal_over(size_t n) {
  std::vector<VarId> vars;
  for (size_t i = 0; i < n; ++i) vars.push_back(VarId{i});
  return std::make_shared<AllEqual>(std::move(vars));
}

std::vector<Value> solution_values(lfdl::Generator<DomainStore> stream) {
  std::vector<Value> out;
  while (stream.next()) {
    const DomainStore& store = stream.value();
    REQUIRE(store.all_singleton());
    REQUIRE(store.lower_bounds_equal());
    out.push_back(store.domain(VarId{0}).lower_bound());
  }
  return out;
}

// Test-only non-idempotent propagator: removes the maximum of one variable's
// domain, a single step per application.
class DropMaxOnce final : public Propagator {
 public:
  explicit DropMaxOnce(VarId var) : vars_{var} {}
  std::span<const VarId> deps() const override { return vars_; }
  bool idempotent() const override { return false; }
  DomainStore apply(const DomainStore& store) const override {
    DomainStore out = store;
    const Domain& d = store.domain(vars_[0]);
    if (d.size() > 1) {
      std::vector<Value> keep(d.values().begin(), d.values().end());
      keep.pop_back();
      out.set_domain(vars_[0], Domain::of(std::move(keep)));
    }
    return out;
  }

 private:
  std::vector<VarId> vars_;
};

}  // namespace

TEST_CASE("split_indomain_min partitions on the lower bound") {
  const DomainStore store({ints({4, 9, 10, 11})});
  const auto [assign, exclude] = lfdl::split_indomain_min(store, VarId{0});
  REQUIRE(assign.kind == ChoiceConstraint::Kind::AssignLowerBound);
  REQUIRE(assign.pivot == Value::integer(4));
  REQUIRE(exclude.kind == ChoiceConstraint::Kind::ExcludeLowerBound);
  REQUIRE(exclude.pivot == Value::integer(4));

  REQUIRE(lfdl::apply_choice(store, assign).domain(VarId{0}) == ints({4}));
  REQUIRE(lfdl::apply_choice(store, exclude).domain(VarId{0}) == ints({9, 10, 11}));
}

TEST_CASE("splitting a singleton gives an assign branch and an empty branch") {
  const DomainStore store({ints({5})});
  const auto [assign, exclude] = lfdl::split_indomain_min(store, VarId{0});
  REQUIRE(lfdl::apply_choice(store, assign).domain(VarId{0}) == ints({5}));
  REQUIRE(lfdl::apply_choice(store, exclude).is_false());
}

TEST_CASE("the two branches together cover exactly the original solutions") {
  const DomainStore store({ints({2, 3})});
  const auto [assign, exclude] = lfdl::split_indomain_min(store, VarId{0});
  auto left = solution_values(lfdl::search_generic({}, {all_equal_over(1)},
                                                   lfdl::apply_choice(store, assign)));
  auto right = solution_values(lfdl::search_generic({}, {all_equal_over(1)},
                                                    lfdl::apply_choice(store, exclude)));
  std::vector<Value> both = left;
  both.insert(both.end(), right.begin(), right.end());
  REQUIRE(both == std::vector<Value>{Value::integer(2), Value::integer(3)});
}

TEST_CASE("new_propagators drops a sole idempotent propagator") {
  const DomainStore before({ints({1, 2}), ints({2})});
  const PropagatorPtr prop = all_equal_over(2);
  const DomainStore after = prop->apply(before);
  REQUIRE_FALSE(after == before);
  REQUIRE(lfdl::new_propagators(*prop, {prop}, before, after).empty());
}

TEST_CASE("new_propagators keeps only propagators touching changed variables") {
  // two equality constraints on disjoint variable pairs
  const auto p01 = std::make_shared<AllEqual>(std::vector<VarId>{VarId{0}, VarId{1}});
  const auto p23 = std::make_shared<AllEqual>(std::vector<VarId>{VarId{2}, VarId{3}});
  const std::vector<PropagatorPtr> all{p01, p23};

  const DomainStore before({ints({1, 2}), ints({2}), ints({5}), ints({5})});
  const DomainStore after = p01->apply(before);
  REQUIRE_FALSE(after == before);

  const auto woken = lfdl::new_propagators(*p01, all, before, after);
  REQUIRE(woken.empty());
  // superset-soundness oracle: the propagator left out is at fixpoint
  REQUIRE(p23->apply(after) == after);
}

TEST_CASE("new_propagators re-queues a non-idempotent propagator and its neighbours") {
  const auto dropper = std::make_shared<DropMaxOnce>(VarId{0});
  const auto equal = std::make_shared<AllEqual>(std::vector<VarId>{VarId{0}, VarId{1}});
  const std::vector<PropagatorPtr> all{dropper, equal};

  const DomainStore before({ints({1, 2, 3}), ints({1, 2, 3})});
  const DomainStore after = dropper->apply(before);
  REQUIRE_FALSE(after == before);
  // direct-application oracle: neither is at fixpoint on the changed store
  REQUIRE_FALSE(dropper->apply(after) == after);

  const auto woken = lfdl::new_propagators(*dropper, all, before, after);
  REQUIRE(woken.size() == 2);
}

TEST_CASE("isolv with no new propagators returns the store unchanged") {
  const DomainStore store({ints({1, 2}), ints({3})});
  REQUIRE(lfdl::isolv({all_equal_over(2)}, {}, store) == store);
}

TEST_CASE("isolv propagates the worked example to its fixpoint") {
  const DomainStore result = lfdl::isolv({}, {all_equal_over(3)}, example_store());
  REQUIRE(result.domain(VarId{0}) == ints({4, 9, 10, 11}));
  REQUIRE(result.domain(VarId{1}) == ints({4, 7, 10}));
  REQUIRE(result.domain(VarId{2}) == ints({4, 7, 10, 11}));
}

TEST_CASE("isolv signals unsatisfiability with a false store") {
  REQUIRE(lfdl::isolv({}, {all_equal_over(2)}, DomainStore({ints({1, 3}), ints({2})}))
              .is_false());
}

TEST_CASE("isolv reaches a simultaneous fixpoint of all propagators") {
  std::mt19937_64 rng(20250907);
  for (int trial = 0; trial < 300; ++trial) {
    const DomainStore store = lfdl::testing::random_store(rng, 4, 8, 12, false);
    std::vector<PropagatorPtr> props;
    props.push_back(all_equal_over(store.var_count()));
    if (store.var_count() >= 2)
      props.push_back(
          std::make_shared<AllEqual>(std::vector<VarId>{VarId{0}, VarId{store.var_count() - 1}}));
    props.push_back(std::make_shared<DropMaxOnce>(VarId{0}));

    const DomainStore result = lfdl::isolv({}, props, store);
    if (!result.is_false()) {
      for (const PropagatorPtr& f : props) REQUIRE(f->apply(result) == result);
    }
  }
}

TEST_CASE("search_generic solves the worked example in increasing order") {
  auto values = solution_values(lfdl::search_generic({}, {all_equal_over(3)}, example_store()));
  REQUIRE(values == std::vector<Value>{Value::integer(4), Value::integer(10)});
}

TEST_CASE("search_generic yields the single solution of a singleton store") {
  auto values = solution_values(lfdl::search_generic({}, {all_equal_over(1)},
                                                     DomainStore({ints({7})})));
  REQUIRE(values == std::vector<Value>{Value::integer(7)});
}

TEST_CASE("search_generic agrees with the intersection oracle") {
  std::mt19937_64 rng(20250908);
  for (int trial = 0; trial < 500; ++trial) {
    DomainStore store = lfdl::testing::random_store(rng, 3, 12, 20, false);
    const auto expected = lfdl::testing::intersection_oracle(store);
    const auto values = solution_values(
        lfdl::search_generic({}, {all_equal_over(store.var_count())}, std::move(store)));
    REQUIRE(values == expected);
  }
}

TEST_CASE("search_generic is deterministic") {
  std::mt19937_64 rng(20250909);
  for (int trial = 0; trial < 50; ++trial) {
    const DomainStore store = lfdl::testing::random_store(rng, 4, 10, 20, true);
    auto a = solution_values(lfdl::search_generic({}, {all_equal_over(store.var_count())}, store));
    auto b = solution_values(lfdl::search_generic({}, {all_equal_over(store.var_count())}, store));
    REQUIRE(a == b);
  }
}
