#ifndef LFDL_SOLVER_HPP
#define LFDL_SOLVER_HPP

#include <utility>
#include <vector>

#include "lfdl/domain.hpp"
#include "lfdl/generator.hpp"
#include "lfdl/propagator.hpp"

namespace lfdl {

/// One branch of an indomain-min split: pin the pivot variable to its lower
/// bound, or rule that lower bound out. The two branches together partition
/// the search space of the pivot variable.
struct ChoiceConstraint {
  enum class Kind { AssignLowerBound, ExcludeLowerBound };
  VarId var;
  Kind kind;
  Value pivot;
};

/// Indomain-min split of x: (x = lb, x > lb) with lb the current minimum.
std::pair<ChoiceConstraint, ChoiceConstraint> split_indomain_min(const DomainStore& store,
                                                                 VarId x);

/// Imposes a choice by direct domain surgery; no propagator is needed for
/// either branch.
DomainStore apply_choice(DomainStore store, const ChoiceConstraint& choice);

/// The propagators from `all` that may no longer be at fixpoint after `f`
/// shrank `before` into `after`: those depending on a changed variable,
/// minus f itself when f is idempotent.
std::vector<PropagatorPtr> new_propagators(const Propagator& f,
                                           const std::vector<PropagatorPtr>& all,
                                           const DomainStore& before,
                                           const DomainStore& after);

/// Incremental propagation to a simultaneous fixpoint of old_props and
/// new_props, or to a false store. Requires `store` to already be a fixpoint
/// of every propagator in old_props; only new_props seed the worklist.
DomainStore isolv(const std::vector<PropagatorPtr>& old_props,
                  const std::vector<PropagatorPtr>& new_props, DomainStore store);

/// Depth-first propagate-and-branch search. Yields every store in which all
/// domains are singletons, exploring the assign branch before the exclude
/// branch; with the indomain-min splitter the solutions stream out in
/// increasing value order. The toplevel call passes no old propagators.
Generator<DomainStore> search_generic(std::vector<PropagatorPtr> old_props,
                                      std::vector<PropagatorPtr> new_props,
                                      DomainStore store);

}  // namespace lfdl

#endif
