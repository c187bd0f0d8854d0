#include "lfdl/trie.hpp"

#include <algorithm>
#include <stdexcept>

#include "lfdl/gallop.hpp"

namespace lfdl {

std::shared_ptr<const TrieRelation> TrieRelation::build(std::string name, size_t arity,
                                                        std::vector<size_t> perm,
                                                        const std::vector<Tuple>& tuples) {
  if (arity == 0) throw std::invalid_argument("relation arity must be positive");
  {
    std::vector<bool> seen(arity, false);
    if (perm.size() != arity) throw std::invalid_argument("permutation size mismatch");
    for (size_t p : perm) {
      if (p >= arity || seen[p]) throw std::invalid_argument("invalid column permutation");
      seen[p] = true;
    }
  }

  std::vector<Tuple> rows;
  rows.reserve(tuples.size());
  for (const Tuple& t : tuples) {
    if (t.size() != arity)
      throw std::invalid_argument("mixed-arity tuple in relation " + name);
    Tuple permuted(arity);
    for (size_t k = 0; k < arity; ++k) permuted[k] = t[perm[k]];
    rows.push_back(std::move(permuted));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  auto trie = std::shared_ptr<TrieRelation>(new TrieRelation());
  trie->name_ = std::move(name);
  trie->arity_ = arity;
  trie->perm_ = std::move(perm);
  trie->tuple_count_ = rows.size();
  trie->levels_.resize(arity);

  // Level k gets one node per distinct (k+1)-prefix of the sorted rows; a
  // node's children are the nodes of level k+1 extending its prefix, which
  // land contiguously because the rows are sorted.
  for (size_t k = 0; k < arity; ++k) {
    Level& level = trie->levels_[k];
    for (size_t r = 0; r < rows.size(); ++r) {
      const bool new_prefix =
          r == 0 || !std::equal(rows[r].begin(), rows[r].begin() + k + 1, rows[r - 1].begin());
      if (new_prefix) {
        if (k > 0) {
          const bool new_parent =
              r == 0 || !std::equal(rows[r].begin(), rows[r].begin() + k, rows[r - 1].begin());
          if (new_parent)
            trie->levels_[k - 1].child_offsets.push_back(
                static_cast<uint32_t>(level.keys.size()));
        }
        level.keys.push_back(rows[r][k]);
      }
    }
    if (k > 0)
      trie->levels_[k - 1].child_offsets.push_back(static_cast<uint32_t>(level.keys.size()));
  }
  return trie;
}

void TrieIterator::open() {
  if (path_.empty()) {
    const auto& keys = relation_->level(0).keys;
    path_.push_back(Frame{0, static_cast<uint32_t>(keys.size()), 0});
    return;
  }
  assert(!at_end());
  assert(depth() + 1 < static_cast<int>(relation_->arity()));
  const Frame& f = frame();
  const auto& offsets = relation_->level(path_.size() - 1).child_offsets;
  path_.push_back(Frame{offsets[f.pos], offsets[f.pos + 1], offsets[f.pos]});
}

void TrieIterator::up() {
  assert(!path_.empty());
  path_.pop_back();
}

void TrieIterator::seek(const Value& t) {
  Frame& f = frame();
  assert(f.pos >= f.hi || !(t < key()));
  const auto& keys = relation_->level(path_.size() - 1).keys;
  f.pos = static_cast<uint32_t>(
      gallop_lower_bound(std::span<const Value>(keys.data(), f.hi), f.pos, t));
}

}  // namespace lfdl
