#ifndef LFDL_ORACLE_HPP
#define LFDL_ORACLE_HPP

#include <set>
#include <vector>

#include "lfdl/ast.hpp"
#include "lfdl/catalog.hpp"
#include "lfdl/var.hpp"

namespace lfdl {

/// Brute-force reference join: enumerates the Cartesian product of the body
/// atoms' tuples and keeps the consistent combinations. Variables index by
/// first textual occurrence, the same convention as the planner, so result
/// sets are directly comparable. Deliberately shares no code with the join
/// engine beyond values and storage.
std::set<Binding> nested_loop_join(const std::vector<Atom>& body, const Catalog& catalog);

/// Reference fixpoint: re-derives every rule from the full relations each
/// round until nothing grows.
Catalog naive_eval(const Program& program, Catalog catalog);

}  // namespace lfdl

#endif
