#ifndef LFDL_ITERATOR_HPP
#define LFDL_ITERATOR_HPP

#include <cassert>
#include <cstddef>
#include <span>

#include "lfdl/domain.hpp"
#include "lfdl/value.hpp"

namespace lfdl {

/// Forward-only cursor over a strictly increasing value sequence. The common
/// face of explicit domains and trie levels; `key` is defined iff not at end,
/// and neither `next` nor `seek` ever moves the cursor backward.
class LinearIterator {
 public:
  virtual ~LinearIterator() = default;

  virtual bool at_end() const = 0;

  /// Current key. Undefined at end.
  virtual Value key() const = 0;

  /// Advances to the next key. Undefined at end.
  virtual void next() = 0;

  /// Moves to the least key >= t, or to the end if none exists. Callers
  /// never pass a t smaller than the current key.
  virtual void seek(const Value& t) = 0;

  /// Snapshot of the keys from the cursor position to the end. Does not
  /// move the cursor; lets solver-backed evaluation materialize a level as
  /// an explicit domain.
  virtual std::span<const Value> remaining() const = 0;
};

/// LinearIterator over an explicit Domain.
class DomainIterator final : public LinearIterator {
 public:
  explicit DomainIterator(Domain d) : domain_(std::move(d)) {}

  bool at_end() const override { return pos_ >= domain_.size(); }
  Value key() const override {
    assert(!at_end());
    return domain_.values()[pos_];
  }
  void next() override {
    assert(!at_end());
    ++pos_;
  }
  void seek(const Value& t) override;
  std::span<const Value> remaining() const override {
    return domain_.values().subspan(pos_);
  }

 private:
  Domain domain_;
  size_t pos_ = 0;
};

/// Wrapper that counts operations and checks the forward-only contract.
class CountingIterator final : public LinearIterator {
 public:
  struct Counters {
    size_t seeks = 0;
    size_t nexts = 0;
  };

  CountingIterator(LinearIterator& inner, Counters& counters)
      : inner_(&inner), counters_(&counters) {}

  bool at_end() const override { return inner_->at_end(); }
  Value key() const override { return inner_->key(); }
  void next() override {
    ++counters_->nexts;
    inner_->next();
  }
  void seek(const Value& t) override {
    assert(inner_->at_end() || !(t < inner_->key()));
    ++counters_->seeks;
    inner_->seek(t);
  }
  std::span<const Value> remaining() const override { return inner_->remaining(); }

 private:
  LinearIterator* inner_;
  Counters* counters_;
};

}  // namespace lfdl

#endif
