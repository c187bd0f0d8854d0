#ifndef LFDL_PROPAGATOR_HPP
#define LFDL_PROPAGATOR_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lfdl/domain.hpp"
#include "lfdl/var.hpp"

namespace lfdl {

/// One lower-bound pruning step: var's minimum was raised toward `target`.
/// `new_lb` is absent when the pruning emptied the domain.
struct RaiseEvent {
  VarId var;
  Value old_lb;
  std::optional<Value> new_lb;
  Value target;
};

using RaiseHook = std::function<void(const RaiseEvent&)>;

/// An ordered mapping from positions 0..n-1 to variables, walked circularly.
/// After the initial sort by lower bound, the lower bounds at positions
/// start, start+1 mod n, ..., start+n-1 mod n stay a non-decreasing series.
struct VarMap {
  std::vector<VarId> slots;
  size_t start = 0;

  size_t size() const { return slots.size(); }
  VarId at(size_t i) const { return slots[(start + i) % slots.size()]; }

  static VarMap identity(size_t n);
  static VarMap over(std::vector<VarId> vars) { return VarMap{std::move(vars), 0}; }
};

/// Global equality propagation over the variables of `map`: repeatedly
/// raises the smallest lower bound to the largest one. The result is either
/// a false store or a store in which all mapped lower bounds are equal. Only
/// values below the running maximum lower bound are removed, so any value
/// common to all mapped domains survives.
DomainStore all_equal(DomainStore store, VarMap map, const RaiseHook& hook = {});

using PropagatorId = uint64_t;

/// A monotone, decreasing function on domain stores that removes values
/// ruled out by one constraint.
class Propagator {
 public:
  Propagator();
  virtual ~Propagator() = default;

  PropagatorId id() const { return id_; }

  /// Variables this propagator reads or prunes.
  virtual std::span<const VarId> deps() const = 0;

  /// True when apply(apply(D)) == apply(D) for every D.
  virtual bool idempotent() const = 0;

  virtual DomainStore apply(const DomainStore& store) const = 0;

 private:
  PropagatorId id_;
};

using PropagatorPtr = std::shared_ptr<const Propagator>;

/// The one constraint Datalog needs: all listed variables take one value.
class AllEqual final : public Propagator {
 public:
  explicit AllEqual(std::vector<VarId> vars, RaiseHook hook = {});

  std::span<const VarId> deps() const override { return vars_; }
  bool idempotent() const override { return true; }
  DomainStore apply(const DomainStore& store) const override;

 private:
  std::vector<VarId> vars_;
  RaiseHook hook_;
};

}  // namespace lfdl

#endif
