#include "lfdl/solver.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace lfdl {

namespace {

std::vector<VarId> changed_vars(const DomainStore& before, const DomainStore& after) {
  std::vector<VarId> changed;
  for (size_t i = 0; i < before.var_count(); ++i) {
    VarId x{i};
    if (!(before.domain(x) == after.domain(x))) changed.push_back(x);
  }
  return changed;
}

bool depends_on_any(const Propagator& g, const std::vector<VarId>& vars) {
  for (VarId x : g.deps())
    if (std::find(vars.begin(), vars.end(), x) != vars.end()) return true;
  return false;
}

std::vector<PropagatorPtr> merged_by_id(const std::vector<PropagatorPtr>& a,
                                        const std::vector<PropagatorPtr>& b) {
  std::vector<PropagatorPtr> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end(),
            [](const PropagatorPtr& x, const PropagatorPtr& y) { return x->id() < y->id(); });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const PropagatorPtr& x, const PropagatorPtr& y) {
                          return x->id() == y->id();
                        }),
            all.end());
  return all;
}

}  // namespace

std::pair<ChoiceConstraint, ChoiceConstraint> split_indomain_min(const DomainStore& store,
                                                                 VarId x) {
  assert(!store.domain(x).empty());
  const Value lb = store.domain(x).lower_bound();
  return {ChoiceConstraint{x, ChoiceConstraint::Kind::AssignLowerBound, lb},
          ChoiceConstraint{x, ChoiceConstraint::Kind::ExcludeLowerBound, lb}};
}

DomainStore apply_choice(DomainStore store, const ChoiceConstraint& choice) {
  const Domain& d = store.domain(choice.var);
  assert(!d.empty() && d.lower_bound() == choice.pivot);
  if (choice.kind == ChoiceConstraint::Kind::AssignLowerBound) {
    store.set_domain(choice.var, Domain::of({choice.pivot}));
  } else {
    store.set_domain(choice.var, d.remove_lower_bound());
  }
  return store;
}

std::vector<PropagatorPtr> new_propagators(const Propagator& f,
                                           const std::vector<PropagatorPtr>& all,
                                           const DomainStore& before,
                                           const DomainStore& after) {
  const std::vector<VarId> changed = changed_vars(before, after);
  std::vector<PropagatorPtr> result;
  for (const PropagatorPtr& g : all) {
    if (g->id() == f.id() && f.idempotent()) continue;
    if (depends_on_any(*g, changed)) result.push_back(g);
  }
  return result;
}

DomainStore isolv(const std::vector<PropagatorPtr>& old_props,
                  const std::vector<PropagatorPtr>& new_props, DomainStore store) {
  const std::vector<PropagatorPtr> all = merged_by_id(old_props, new_props);

  // FIFO worklist without duplicates, seeded with the new propagators.
  std::deque<PropagatorPtr> queue;
  std::set<PropagatorId> queued;
  for (const PropagatorPtr& f : new_props) {
    if (queued.insert(f->id()).second) queue.push_back(f);
  }

  while (!queue.empty()) {
    PropagatorPtr f = queue.front();
    queue.pop_front();
    queued.erase(f->id());
    DomainStore pruned = f->apply(store);
    if (!(pruned == store)) {
      for (const PropagatorPtr& g : new_propagators(*f, all, store, pruned)) {
        if (queued.insert(g->id()).second) queue.push_back(g);
      }
    }
    store = std::move(pruned);
  }
  return store;
}

Generator<DomainStore> search_generic(std::vector<PropagatorPtr> old_props,
                                      std::vector<PropagatorPtr> new_props,
                                      DomainStore store) {
  struct Node {
    std::vector<PropagatorPtr> old_props;
    std::vector<PropagatorPtr> new_props;
    DomainStore store;
  };

  // Depth-first via an explicit stack; the assign branch is pushed last so
  // it is explored first.
  std::vector<Node> stack;
  stack.push_back(Node{std::move(old_props), std::move(new_props), std::move(store)});

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();

    DomainStore current = isolv(node.old_props, node.new_props, std::move(node.store));
    if (current.is_false()) continue;
    if (current.all_singleton()) {
      co_yield current;
      continue;
    }

    // Lowest-id variable with more than one candidate left.
    VarId split_var{0};
    for (size_t i = 0; i < current.var_count(); ++i) {
      if (current.domain(VarId{i}).size() > 1) {
        split_var = VarId{i};
        break;
      }
    }
    auto [assign, exclude] = split_indomain_min(current, split_var);

    // The surgery touches split_var, so propagators depending on it become
    // new again in the child; the rest keep their fixpoint.
    const std::vector<PropagatorPtr> all = merged_by_id(node.old_props, node.new_props);
    std::vector<PropagatorPtr> child_new;
    std::vector<PropagatorPtr> child_old;
    for (const PropagatorPtr& g : all) {
      if (depends_on_any(*g, {split_var}))
        child_new.push_back(g);
      else
        child_old.push_back(g);
    }

    stack.push_back(Node{child_old, child_new, apply_choice(current, exclude)});
    stack.push_back(Node{child_old, child_new, apply_choice(current, assign)});
  }
}

}  // namespace lfdl
