#ifndef LFDL_AST_HPP
#define LFDL_AST_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lfdl/value.hpp"

namespace lfdl {

/// An atom argument: a named variable or a constant value.
struct Term {
  enum class Kind { Variable, Constant };

  Kind kind = Kind::Constant;
  std::string var;  // valid for Variable
  Value constant;   // valid for Constant

  static Term variable(std::string name) {
    Term t;
    t.kind = Kind::Variable;
    t.var = std::move(name);
    return t;
  }
  static Term constant_of(Value v) {
    Term t;
    t.kind = Kind::Constant;
    t.constant = v;
    return t;
  }
  bool is_variable() const { return kind == Kind::Variable; }
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;
  size_t line = 0;  // source position of the predicate, for diagnostics
  size_t column = 0;

  size_t arity() const { return args.size(); }
  bool is_ground() const {
    for (const Term& t : args)
      if (t.is_variable()) return false;
    return true;
  }
};

struct Rule {
  Atom head;
  std::vector<Atom> body;  // non-empty
};

struct Program {
  std::vector<Rule> rules;
  std::vector<Atom> facts;  // ground atoms
};

}  // namespace lfdl

#endif
