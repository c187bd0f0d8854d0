#ifndef LFDL_PARSER_HPP
#define LFDL_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lfdl/ast.hpp"

namespace lfdl {

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}

  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

/// Parses and validates a program.
///
/// Clauses end with '.'; ':-' separates a rule head from its body; '%'
/// starts a line comment. Predicates and symbol constants are lowercase
/// identifiers, integer constants are optionally signed digits, variables
/// start with an uppercase letter or underscore.
///
/// Validation: a predicate keeps one arity across the program, facts are
/// ground, and every head variable occurs in the rule body.
Program parse_program(std::string_view text);

/// Parses a comma-separated atom list (a query), with optional trailing '.'.
std::vector<Atom> parse_body(std::string_view text);

}  // namespace lfdl

#endif
