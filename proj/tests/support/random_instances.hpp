#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "lfdl/ast.hpp"
#include "lfdl/catalog.hpp"
#include "lfdl/domain.hpp"

namespace lfdl::testing {

inline Value random_value(std::mt19937_64& rng, int64_t max_int, bool with_symbols) {
  static const char* pool[] = {"a", "b", "c", "d", "e", "f"};
  if (with_symbols && std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    return Value::symbol(pool[std::uniform_int_distribution<size_t>(0, 5)(rng)]);
  return Value::integer(std::uniform_int_distribution<int64_t>(0, max_int)(rng));
}

inline Domain random_domain(std::mt19937_64& rng, size_t max_size, int64_t max_int,
                            bool with_symbols = false) {
  const size_t size = std::uniform_int_distribution<size_t>(0, max_size)(rng);
  std::vector<Value> values;
  values.reserve(size);
  for (size_t i = 0; i < size; ++i) values.push_back(random_value(rng, max_int, with_symbols));
  return Domain::of(std::move(values));
}

inline DomainStore random_store(std::mt19937_64& rng, size_t max_vars, size_t max_size,
                                int64_t max_int, bool with_symbols = false) {
  const size_t n = std::uniform_int_distribution<size_t>(1, max_vars)(rng);
  std::vector<Domain> domains;
  domains.reserve(n);
  for (size_t i = 0; i < n; ++i)
    domains.push_back(random_domain(rng, max_size, max_int, with_symbols));
  return DomainStore(std::move(domains));
}

/// Sorted intersection of all domains of a store, by explicit set algebra.
inline std::vector<Value> intersection_oracle(const DomainStore& store) {
  std::set<Value> common(store.domain(VarId{0}).values().begin(),
                         store.domain(VarId{0}).values().end());
  for (size_t i = 1; i < store.var_count(); ++i) {
    std::set<Value> next;
    for (const Value& v : store.domain(VarId{i}).values())
      if (common.count(v)) next.insert(v);
    common = std::move(next);
  }
  return std::vector<Value>(common.begin(), common.end());
}

/// A random join instance: a few relations in a catalog plus a body over
/// them, sized so brute force stays cheap.
struct RandomJoinInstance {
  Catalog catalog;
  std::vector<Atom> body;
};

inline RandomJoinInstance random_join_instance(std::mt19937_64& rng, size_t max_atoms = 3,
                                               size_t max_arity = 3, size_t max_vars = 5,
                                               size_t max_tuples = 50, int64_t max_int = 20) {
  RandomJoinInstance inst;
  const size_t n_atoms = std::uniform_int_distribution<size_t>(1, max_atoms)(rng);
  const char* var_names[] = {"V", "W", "X", "Y", "Z"};

  for (size_t a = 0; a < n_atoms; ++a) {
    const std::string pred = "r" + std::to_string(a);
    const size_t arity = std::uniform_int_distribution<size_t>(1, max_arity)(rng);
    inst.catalog.define(pred, arity);
    const size_t rows = std::uniform_int_distribution<size_t>(0, max_tuples)(rng);
    for (size_t r = 0; r < rows; ++r) {
      Tuple t;
      for (size_t k = 0; k < arity; ++k) t.push_back(random_value(rng, max_int, false));
      inst.catalog.insert(pred, std::move(t));
    }
    Atom atom;
    atom.predicate = pred;
    for (size_t k = 0; k < arity; ++k) {
      if (std::uniform_int_distribution<int>(0, 6)(rng) == 0) {
        atom.args.push_back(Term::constant_of(random_value(rng, max_int, false)));
      } else {
        const size_t v = std::uniform_int_distribution<size_t>(0, max_vars - 1)(rng);
        atom.args.push_back(Term::variable(var_names[v]));
      }
    }
    inst.body.push_back(std::move(atom));
  }
  return inst;
}

/// Random digraph as edge facts over node ids 0..n-1.
inline std::vector<std::pair<int64_t, int64_t>> random_digraph(std::mt19937_64& rng,
                                                               size_t max_nodes = 15) {
  const size_t n = std::uniform_int_distribution<size_t>(1, max_nodes)(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int64_t, int64_t>> edges;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (coin(rng) < 0.15) edges.emplace_back(static_cast<int64_t>(i), static_cast<int64_t>(j));
  return edges;
}

}  // namespace lfdl::testing
