#include "lfdl/leapfrog.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lfdl {

namespace {

#ifndef NDEBUG
// Keys at positions min_pos..min_pos+n-1 (circularly) are non-decreasing.
bool circularly_sorted(const std::vector<LinearIterator*>& iters,
                       const std::vector<size_t>& order, size_t min_pos) {
  const size_t n = order.size();
  bool have_prev = false;
  Value prev;
  for (size_t j = 0; j < n; ++j) {
    const LinearIterator& it = *iters[order[(min_pos + j) % n]];
    if (it.at_end()) return true;
    if (have_prev && it.key() < prev) return false;
    prev = it.key();
    have_prev = true;
  }
  return true;
}
#endif

}  // namespace

DomainStore inc_domain(DomainStore store, VarId x) {
  store.set_domain(x, store.domain(x).remove_lower_bound());
  return store;
}

Generator<Binding> search_tailrec(DomainStore store, const RaiseHook& hook) {
  const size_t n = store.var_count();
  assert(n >= 1);
  const VarMap map = VarMap::identity(n);
  for (;;) {
    store = all_equal(std::move(store), map, hook);
    if (store.is_false()) co_return;
    // Lower bounds now agree: every variable maps to the common value.
    Binding binding(n);
    for (size_t i = 0; i < n; ++i) binding[i] = store.domain(VarId{i}).lower_bound();
    co_yield binding;
    store = inc_domain(std::move(store), VarId{0});
  }
}

Generator<Value> leapfrog_join(std::vector<LinearIterator*> iters) {
  const size_t n = iters.size();
  assert(n >= 1);
  for (LinearIterator* it : iters)
    if (it->at_end()) co_return;

  // Order the inputs once by their first key (input index breaks ties);
  // min_pos then chases the smallest key around this ring.
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return iters[a]->key() < iters[b]->key();
  });

  size_t min_pos = 0;
  Value max_key = iters[order[n - 1]]->key();

  for (;;) {
    // Advance the smallest input until all keys agree or one runs out.
    for (;;) {
      LinearIterator& least = *iters[order[min_pos]];
      if (least.key() == max_key) break;  // all n inputs sit on max_key
      least.seek(max_key);
      if (least.at_end()) co_return;
      max_key = least.key();
      min_pos = (min_pos + 1) % n;
      assert(circularly_sorted(iters, order, min_pos));
    }

    co_yield max_key;

    // Step the input just behind min_pos; it was the largest, so the ring
    // stays sorted without any rework.
    LinearIterator& behind = *iters[order[(min_pos + n - 1) % n]];
    behind.next();
    if (behind.at_end()) co_return;
    max_key = behind.key();
    assert(circularly_sorted(iters, order, min_pos));
  }
}

}  // namespace lfdl
