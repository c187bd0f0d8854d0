#include "lfdl/propagator.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

namespace lfdl {

namespace {

std::atomic<PropagatorId> next_propagator_id{1};

#ifndef NDEBUG
// Lower bounds at positions i..i+n-1 (circularly) form a non-decreasing
// series, ignoring any emptied domain.
bool circularly_sorted(const DomainStore& store, const std::vector<VarId>& slots,
                       size_t from) {
  const size_t n = slots.size();
  bool have_prev = false;
  Value prev;
  for (size_t j = 0; j < n; ++j) {
    const Domain& d = store.domain(slots[(from + j) % n]);
    if (d.empty()) return true;  // false store ends the walk anyway
    if (have_prev && d.lower_bound() < prev) return false;
    prev = d.lower_bound();
    have_prev = true;
  }
  return true;
}
#endif

}  // namespace

VarMap VarMap::identity(size_t n) {
  VarMap m;
  m.slots.reserve(n);
  for (size_t i = 0; i < n; ++i) m.slots.push_back(VarId{i});
  return m;
}

DomainStore all_equal(DomainStore store, VarMap map, const RaiseHook& hook) {
  const size_t n = map.size();
  assert(n >= 1);
  for (size_t i = 0; i < n; ++i)
    if (store.domain(map.slots[i]).empty()) return store;  // already false

  // Sort by increasing lower bound, variable id as tiebreaker.
  std::sort(map.slots.begin(), map.slots.end(), [&](VarId a, VarId b) {
    const Value la = store.domain(a).lower_bound();
    const Value lb = store.domain(b).lower_bound();
    if (la != lb) return la < lb;
    return a < b;
  });
  map.start = 0;

  Value max_lb = store.domain(map.slots[n - 1]).lower_bound();
  size_t i = 0;
  while (store.domain(map.slots[i]).lower_bound() != max_lb) {
    const VarId x = map.slots[i];
    const Value old_lb = store.domain(x).lower_bound();
    Domain raised = store.domain(x).raise_lower_bound(max_lb);
    if (hook) {
      RaiseEvent ev{x, old_lb, std::nullopt, max_lb};
      if (!raised.empty()) ev.new_lb = raised.lower_bound();
      hook(ev);
    }
    const bool emptied = raised.empty();
    store.set_domain(x, std::move(raised));
    if (emptied) return store;  // false store
    max_lb = store.domain(x).lower_bound();
    i = (i + 1) % n;
    assert(circularly_sorted(store, map.slots, i));
  }
  return store;
}

Propagator::Propagator() : id_(next_propagator_id.fetch_add(1)) {}

AllEqual::AllEqual(std::vector<VarId> vars, RaiseHook hook)
    : vars_(std::move(vars)), hook_(std::move(hook)) {
  assert(!vars_.empty());
}

DomainStore AllEqual::apply(const DomainStore& store) const {
  return all_equal(store, VarMap::over(vars_), hook_);
}

}  // namespace lfdl
