#ifndef LFDL_DOMAIN_HPP
#define LFDL_DOMAIN_HPP

#include <cassert>
#include <memory>
#include <span>
#include <vector>

#include "lfdl/value.hpp"
#include "lfdl/var.hpp"

namespace lfdl {

/// The admissible values of one variable: a strictly increasing sequence.
///
/// A Domain is an immutable view over shared storage. Every shrinking
/// operation used by the engines only trims the front, so "shrinking" is a
/// cheap suffix step and snapshots for backtracking are plain copies.
class Domain {
 public:
  Domain() = default;  // empty

  /// Builds a domain from arbitrary values: sorts and removes duplicates.
  static Domain of(std::vector<Value> values);

  /// Builds from an already strictly increasing sequence.
  static Domain from_sorted(std::vector<Value> values);

  /// The integer domain {first, first+1, ..., last}; empty if last < first.
  static Domain int_range(int64_t first, int64_t last);

  bool empty() const { return begin_ == total(); }
  size_t size() const { return total() - begin_; }

  /// Minimum element. Callers must rule out the empty (false) domain first.
  Value lower_bound() const {
    assert(!empty());
    return (*data_)[begin_];
  }

  /// Removes every element smaller than t. May produce the empty domain.
  Domain raise_lower_bound(const Value& t) const;

  /// Removes the minimum element. The domain must be non-empty.
  Domain remove_lower_bound() const {
    assert(!empty());
    return Domain(data_, begin_ + 1);
  }

  std::span<const Value> values() const {
    if (!data_) return {};
    return std::span<const Value>(data_->data() + begin_, size());
  }

  /// Element-wise equality; views over different storage can be equal.
  friend bool operator==(const Domain& a, const Domain& b);

 private:
  Domain(std::shared_ptr<const std::vector<Value>> data, size_t begin)
      : data_(std::move(data)), begin_(begin) {}

  size_t total() const { return data_ ? data_->size() : 0; }

  std::shared_ptr<const std::vector<Value>> data_;
  size_t begin_ = 0;
};

/// The domains of all variables of one query, indexed by VarId.
class DomainStore {
 public:
  DomainStore() = default;
  explicit DomainStore(std::vector<Domain> domains) : domains_(std::move(domains)) {}

  size_t var_count() const { return domains_.size(); }

  const Domain& domain(VarId x) const {
    assert(x.index < domains_.size());
    return domains_[x.index];
  }

  void set_domain(VarId x, Domain d) {
    assert(x.index < domains_.size());
    domains_[x.index] = std::move(d);
  }

  /// A store is false iff some variable has no admissible values left.
  bool is_false() const;

  bool all_singleton() const;

  /// Solved in the unary sense: non-false and all lower bounds equal.
  bool lower_bounds_equal() const;

  friend bool operator==(const DomainStore& a, const DomainStore& b);

 private:
  std::vector<Domain> domains_;
};

}  // namespace lfdl

#endif
