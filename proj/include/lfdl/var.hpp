#ifndef LFDL_VAR_HPP
#define LFDL_VAR_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "lfdl/value.hpp"

namespace lfdl {

/// Identity of a query variable: a dense index, 0..n-1 within one query.
struct VarId {
  size_t index = 0;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// A total assignment of query variables to values, indexed by VarId.
using Binding = std::vector<Value>;

}  // namespace lfdl

#endif
