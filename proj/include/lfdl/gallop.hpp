#ifndef LFDL_GALLOP_HPP
#define LFDL_GALLOP_HPP

#include <algorithm>
#include <cstddef>
#include <span>

#include "lfdl/value.hpp"

namespace lfdl {

/// Least index i in [from, keys.size()) with keys[i] >= target, or
/// keys.size() if none. Doubling probe from `from` followed by a binary
/// search, so the cost is logarithmic in the distance moved rather than in
/// the sequence length. Compile with LFDL_LINEAR_SEEK for a plain scan.
inline size_t gallop_lower_bound(std::span<const Value> keys, size_t from,
                                 const Value& target) {
  const size_t n = keys.size();
#ifdef LFDL_LINEAR_SEEK
  size_t i = from;
  while (i < n && keys[i] < target) ++i;
  return i;
#else
  if (from >= n || !(keys[from] < target)) return from;
  size_t step = 1;
  size_t lo = from;  // keys[lo] < target
  while (lo + step < n && keys[lo + step] < target) {
    lo += step;
    step *= 2;
  }
  size_t hi = std::min(lo + step, n);  // keys[hi] >= target or hi == n
  const Value* found =
      std::lower_bound(keys.data() + lo + 1, keys.data() + hi, target);
  return static_cast<size_t>(found - keys.data());
#endif
}

}  // namespace lfdl

#endif
