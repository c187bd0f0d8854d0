#ifndef LFDL_SEMINAIVE_HPP
#define LFDL_SEMINAIVE_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <set>

#include "lfdl/ast.hpp"
#include "lfdl/catalog.hpp"
#include "lfdl/join.hpp"

namespace lfdl {

/// Called after each fixpoint round with the facts first derived in it.
using RoundObserver =
    std::function<void(size_t round, const std::map<std::string, std::set<Tuple>>& delta)>;

/// Bottom-up least-fixpoint evaluation. The program's facts are merged into
/// `catalog` (which may already hold externally loaded relations), rule
/// bodies run through the n-ary join executor, and from the second round on
/// each rule is evaluated once per rule-defined body atom with that atom
/// redirected to the previous round's delta. Newly derived tuples are
/// buffered and merged between rounds, so trie iterators never observe
/// mutation. Returns the catalog extended with all derived relations.
Catalog evaluate_seminaive(const Program& program, Catalog catalog,
                           JoinCore core = JoinCore::Leapfrog,
                           std::ostream* trace = nullptr,
                           const RoundObserver& observer = {});

}  // namespace lfdl

#endif
