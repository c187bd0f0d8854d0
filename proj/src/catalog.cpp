#include "lfdl/catalog.hpp"

#include <stdexcept>

namespace lfdl {

const Catalog::Relation& Catalog::rel(const std::string& name) const {
  auto it = rels_.find(name);
  if (it == rels_.end()) throw std::out_of_range("unknown relation: " + name);
  return it->second;
}

Catalog::Relation& Catalog::rel(const std::string& name) {
  auto it = rels_.find(name);
  if (it == rels_.end()) throw std::out_of_range("unknown relation: " + name);
  return it->second;
}

void Catalog::define(const std::string& name, size_t arity) {
  auto [it, inserted] = rels_.try_emplace(name);
  if (inserted) {
    it->second.arity = arity;
  } else if (it->second.arity != arity) {
    throw std::invalid_argument("relation " + name + " redefined with arity " +
                                std::to_string(arity) + ", was " +
                                std::to_string(it->second.arity));
  }
}

bool Catalog::insert(const std::string& name, Tuple tuple) {
  Relation& r = rel(name);
  if (tuple.size() != r.arity)
    throw std::invalid_argument("tuple arity mismatch for relation " + name);
  const bool fresh = r.tuples.insert(std::move(tuple)).second;
  if (fresh) r.tries.clear();
  return fresh;
}

void Catalog::replace(const std::string& name, size_t arity, std::vector<Tuple> tuples) {
  Relation& r = rels_[name];
  r.arity = arity;
  r.tuples.clear();
  r.tries.clear();
  for (Tuple& t : tuples) {
    if (t.size() != arity)
      throw std::invalid_argument("tuple arity mismatch for relation " + name);
    r.tuples.insert(std::move(t));
  }
}

std::shared_ptr<const TrieRelation> Catalog::trie(const std::string& name,
                                                  const std::vector<size_t>& perm) const {
  const Relation& r = rel(name);
  auto it = r.tries.find(perm);
  if (it != r.tries.end()) return it->second;
  std::vector<Tuple> rows(r.tuples.begin(), r.tuples.end());
  auto built = TrieRelation::build(name, r.arity, perm, rows);
  r.tries.emplace(perm, built);
  return built;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(rels_.size());
  for (const auto& [name, _] : rels_) out.push_back(name);
  return out;
}

}  // namespace lfdl
