#ifndef LFDL_PLAN_HPP
#define LFDL_PLAN_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lfdl/ast.hpp"
#include "lfdl/catalog.hpp"

namespace lfdl {

/// Validation failure while planning or evaluating: unknown predicate,
/// arity mismatch, and the like.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One argument occurrence in a body: (atom index, argument position).
struct Occurrence {
  size_t atom;
  size_t arg;
};

/// All occurrences of one body variable; the join binds each class to a
/// single value. Rank is the class's position in the elimination order.
struct EqClass {
  size_t rank;
  std::string var;
  std::vector<Occurrence> occurrences;
};

/// How one body atom is executed: its trie permutation and, per trie level,
/// whether the level is pinned to a constant or joins an equality class.
struct AtomPlan {
  struct LevelSpec {
    bool is_constant;
    Value constant;     // valid when is_constant
    size_t class_rank;  // valid when !is_constant
  };

  size_t atom_index;
  std::string predicate;
  std::vector<size_t> perm;  // trie level -> original argument position
  std::vector<LevelSpec> levels;
};

/// A multiway join plan: classes in elimination order (first textual
/// occurrence), per-atom permutations that keep each atom's levels aligned
/// with that order (constants first), and the participant atoms per class.
struct JoinPlan {
  std::vector<EqClass> classes;
  std::vector<AtomPlan> atoms;
  std::vector<std::vector<size_t>> participants;  // per class: atom indices
};

/// Plans `body` against the catalog. Every predicate must exist with a
/// matching arity.
JoinPlan make_plan(const std::vector<Atom>& body, const Catalog& catalog);

/// One-line-per-class description of a plan, for --explain output.
std::string explain(const JoinPlan& plan);

}  // namespace lfdl

#endif
