#ifndef LFDL_JOIN_HPP
#define LFDL_JOIN_HPP

#include <iosfwd>

#include "lfdl/generator.hpp"
#include "lfdl/plan.hpp"
#include "lfdl/var.hpp"

namespace lfdl {

/// Which engine runs the per-class unary join. All cores produce the same
/// stream; Leapfrog works directly on the trie cursors, the other two
/// materialize each level into explicit domains and run the solver.
enum class JoinCore { Leapfrog, Generic, Tailrec };

/// Executes a join plan: one unary join per equality class, nested in class
/// order. Yields exactly the bindings under which every body atom is a
/// stored fact, in lexicographic class-rank order, without duplicates.
/// Bindings index by class rank (== VarId of the class variable).
///
/// When `trace` is set, one line per lower-bound raise is written to it.
Generator<Binding> execute_plan(const JoinPlan& plan, const Catalog& catalog,
                                JoinCore core = JoinCore::Leapfrog,
                                std::ostream* trace = nullptr);

}  // namespace lfdl

#endif
