#ifndef LFDL_TRIE_HPP
#define LFDL_TRIE_HPP

#include <cassert>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lfdl/iterator.hpp"
#include "lfdl/value.hpp"

namespace lfdl {

using Tuple = std::vector<Value>;

/// An n-ary relation stored as a sorted trie under a fixed column
/// permutation. Level k holds one key per distinct (k+1)-prefix of the
/// permuted tuple set; sibling keys are strictly increasing, and every
/// root-to-leaf path spells exactly one stored tuple.
///
/// The levels are flattened: each node's children are a contiguous range of
/// the next level, so navigation is index arithmetic and seeks are searches
/// over plain arrays. Built tries are immutable and freely shareable.
class TrieRelation {
 public:
  struct Level {
    std::vector<Value> keys;
    // Node i's children are keys [child_offsets[i], child_offsets[i+1]) of
    // the next level. Empty on the last level.
    std::vector<uint32_t> child_offsets;
  };

  /// Builds the trie for `tuples` with columns reordered by perm (level k
  /// stores original column perm[k]). Duplicates collapse; a tuple of the
  /// wrong width or an invalid permutation is rejected.
  static std::shared_ptr<const TrieRelation> build(std::string name, size_t arity,
                                                   std::vector<size_t> perm,
                                                   const std::vector<Tuple>& tuples);

  const std::string& name() const { return name_; }
  size_t arity() const { return arity_; }
  const std::vector<size_t>& perm() const { return perm_; }
  size_t tuple_count() const { return tuple_count_; }

  const Level& level(size_t depth) const {
    assert(depth < levels_.size());
    return levels_[depth];
  }

 private:
  TrieRelation() = default;

  std::string name_;
  size_t arity_ = 0;
  std::vector<size_t> perm_;
  std::vector<Level> levels_;
  size_t tuple_count_ = 0;
};

/// Cursor over a TrieRelation. At depth d >= 0 it stands in a sibling range
/// of level d and offers the linear protocol over those keys; open descends
/// into the children of the current key, up returns to exactly the position
/// the matching open left.
class TrieIterator {
 public:
  explicit TrieIterator(std::shared_ptr<const TrieRelation> relation)
      : relation_(std::move(relation)) {}

  const TrieRelation& relation() const { return *relation_; }

  /// -1 at the root, otherwise the level the cursor stands in.
  int depth() const { return static_cast<int>(path_.size()) - 1; }

  /// Descends one level: from the root to the top-level keys, or from the
  /// current key to its children. Not legal on the last level or at end.
  void open();

  /// Ascends one level, restoring the pre-open position. Not legal at root.
  void up();

  // Linear protocol over the current sibling range (depth >= 0).
  bool at_end() const {
    const Frame& f = frame();
    return f.pos >= f.hi;
  }
  Value key() const {
    const Frame& f = frame();
    assert(f.pos < f.hi);
    return relation_->level(path_.size() - 1).keys[f.pos];
  }
  void next() {
    Frame& f = frame();
    assert(f.pos < f.hi);
    ++f.pos;
  }
  void seek(const Value& t);
  std::span<const Value> remaining() const {
    const Frame& f = frame();
    const auto& keys = relation_->level(path_.size() - 1).keys;
    return std::span<const Value>(keys.data() + f.pos, f.hi - f.pos);
  }

 private:
  struct Frame {
    uint32_t lo, hi, pos;
  };

  const Frame& frame() const {
    assert(!path_.empty());
    return path_.back();
  }
  Frame& frame() {
    assert(!path_.empty());
    return path_.back();
  }

  std::shared_ptr<const TrieRelation> relation_;
  std::vector<Frame> path_;
};

/// LinearIterator view of a TrieIterator's current level, for handing trie
/// levels to the join cores. The view is only valid while the underlying
/// iterator stands at the depth it was taken at.
class TrieCursor final : public LinearIterator {
 public:
  explicit TrieCursor(TrieIterator& it) : it_(&it), depth_(it.depth()) {
    assert(depth_ >= 0);
  }

  bool at_end() const override {
    assert(it_->depth() == depth_);
    return it_->at_end();
  }
  Value key() const override {
    assert(it_->depth() == depth_);
    return it_->key();
  }
  void next() override {
    assert(it_->depth() == depth_);
    it_->next();
  }
  void seek(const Value& t) override {
    assert(it_->depth() == depth_);
    it_->seek(t);
  }
  std::span<const Value> remaining() const override {
    assert(it_->depth() == depth_);
    return it_->remaining();
  }

 private:
  TrieIterator* it_;
  int depth_;
};

/// The current trie level as a LinearIterator.
inline TrieCursor level_iter(TrieIterator& it) { return TrieCursor(it); }

}  // namespace lfdl

#endif
