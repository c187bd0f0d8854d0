#ifndef LFDL_LEAPFROG_HPP
#define LFDL_LEAPFROG_HPP

#include <vector>

#include "lfdl/domain.hpp"
#include "lfdl/generator.hpp"
#include "lfdl/iterator.hpp"
#include "lfdl/propagator.hpp"
#include "lfdl/var.hpp"

namespace lfdl {

/// Removes the minimum of D(x); all other domains are untouched.
DomainStore inc_domain(DomainStore store, VarId x);

/// Indomain-min search specialized for a single equality constraint over all
/// variables of the store: propagate, yield the common lower bound, drop it,
/// repeat. A plain loop, so it runs in constant auxiliary space no matter
/// how many solutions stream out.
Generator<Binding> search_tailrec(DomainStore store, const RaiseHook& hook = {});

/// Leapfrog join: yields exactly the values present in all n sequences, in
/// increasing order. Iterators must be positioned at their first key; if any
/// starts exhausted the stream is empty. After the initial sort the ordering
/// is maintained for free: the minimum position advances circularly, and
/// after each match only the iterator just behind it is stepped.
Generator<Value> leapfrog_join(std::vector<LinearIterator*> iters);

}  // namespace lfdl

#endif
