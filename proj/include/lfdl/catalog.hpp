#ifndef LFDL_CATALOG_HPP
#define LFDL_CATALOG_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lfdl/trie.hpp"

namespace lfdl {

/// Named relations with their tuples, plus a cache of built tries keyed by
/// column permutation. Inserts invalidate the affected relation's tries, so
/// iterators must not be held across mutation; in the evaluator all inserts
/// happen between fixpoint rounds.
class Catalog {
 public:
  bool has(const std::string& name) const { return rels_.count(name) > 0; }
  size_t arity(const std::string& name) const { return rel(name).arity; }

  /// Declares a relation. Redeclaring with the same arity is a no-op;
  /// conflicting arity is an error.
  void define(const std::string& name, size_t arity);

  /// Adds a tuple (set semantics). Returns true when the tuple is new.
  bool insert(const std::string& name, Tuple tuple);

  /// Replaces a relation's contents wholesale.
  void replace(const std::string& name, size_t arity, std::vector<Tuple> tuples);

  void erase(const std::string& name) { rels_.erase(name); }

  const std::set<Tuple>& tuples(const std::string& name) const { return rel(name).tuples; }

  size_t tuple_count(const std::string& name) const { return rel(name).tuples.size(); }

  /// The trie for (relation, perm), built on first use and cached.
  std::shared_ptr<const TrieRelation> trie(const std::string& name,
                                           const std::vector<size_t>& perm) const;

  /// All relation names, sorted.
  std::vector<std::string> names() const;

 private:
  struct Relation {
    size_t arity = 0;
    std::set<Tuple> tuples;
    mutable std::map<std::vector<size_t>, std::shared_ptr<const TrieRelation>> tries;
  };

  const Relation& rel(const std::string& name) const;
  Relation& rel(const std::string& name);

  std::map<std::string, Relation> rels_;
};

}  // namespace lfdl

#endif
