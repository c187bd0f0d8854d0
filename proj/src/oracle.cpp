#include "lfdl/oracle.hpp"

#include <map>
#include <string>

#include "lfdl/plan.hpp"

namespace lfdl {

std::set<Binding> nested_loop_join(const std::vector<Atom>& body, const Catalog& catalog) {
  std::map<std::string, size_t> rank_of;
  for (const Atom& a : body) {
    if (!catalog.has(a.predicate))
      throw EvalError("unknown predicate " + a.predicate + "/" + std::to_string(a.arity()));
    if (catalog.arity(a.predicate) != a.arity())
      throw EvalError("predicate " + a.predicate + " used with arity " +
                      std::to_string(a.arity()) + ", declared with arity " +
                      std::to_string(catalog.arity(a.predicate)));
    for (const Term& t : a.args)
      if (t.is_variable()) rank_of.try_emplace(t.var, rank_of.size());
  }

  std::vector<std::vector<Tuple>> rows;
  for (const Atom& a : body) {
    const auto& tuples = catalog.tuples(a.predicate);
    rows.emplace_back(tuples.begin(), tuples.end());
    if (rows.back().empty()) return {};
  }

  std::set<Binding> out;
  std::vector<size_t> pick(body.size(), 0);
  for (;;) {
    Binding binding(rank_of.size());
    std::vector<bool> bound(rank_of.size(), false);
    bool consistent = true;
    for (size_t a = 0; consistent && a < body.size(); ++a) {
      const Tuple& tuple = rows[a][pick[a]];
      for (size_t k = 0; consistent && k < tuple.size(); ++k) {
        const Term& t = body[a].args[k];
        if (!t.is_variable()) {
          consistent = tuple[k] == t.constant;
        } else {
          const size_t r = rank_of.at(t.var);
          if (!bound[r]) {
            binding[r] = tuple[k];
            bound[r] = true;
          } else {
            consistent = binding[r] == tuple[k];
          }
        }
      }
    }
    if (consistent) out.insert(std::move(binding));

    size_t a = 0;
    while (a < body.size() && ++pick[a] == rows[a].size()) {
      pick[a] = 0;
      ++a;
    }
    if (a == body.size()) break;
  }
  return out;
}

Catalog naive_eval(const Program& program, Catalog catalog) {
  for (const Atom& fact : program.facts) {
    if (catalog.has(fact.predicate) && catalog.arity(fact.predicate) != fact.arity())
      throw EvalError("predicate " + fact.predicate + " used with arity " +
                      std::to_string(fact.arity()));
    catalog.define(fact.predicate, fact.arity());
    Tuple tuple;
    for (const Term& t : fact.args) tuple.push_back(t.constant);
    catalog.insert(fact.predicate, std::move(tuple));
  }
  for (const Rule& rule : program.rules) {
    if (catalog.has(rule.head.predicate) &&
        catalog.arity(rule.head.predicate) != rule.head.arity())
      throw EvalError("predicate " + rule.head.predicate + " used with arity " +
                      std::to_string(rule.head.arity()));
    catalog.define(rule.head.predicate, rule.head.arity());
  }
  for (const Rule& rule : program.rules)
    for (const Atom& atom : rule.body) {
      if (!catalog.has(atom.predicate))
        throw EvalError("unknown predicate " + atom.predicate + "/" +
                        std::to_string(atom.arity()));
      if (catalog.arity(atom.predicate) != atom.arity())
        throw EvalError("predicate " + atom.predicate + " used with arity " +
                        std::to_string(atom.arity()));
    }

  for (;;) {
    std::vector<std::pair<std::string, Tuple>> derived;
    for (const Rule& rule : program.rules) {
      std::map<std::string, size_t> rank_of;
      for (const Atom& a : rule.body)
        for (const Term& t : a.args)
          if (t.is_variable()) rank_of.try_emplace(t.var, rank_of.size());
      for (const Binding& b : nested_loop_join(rule.body, catalog)) {
        Tuple head;
        for (const Term& t : rule.head.args)
          head.push_back(t.is_variable() ? b[rank_of.at(t.var)] : t.constant);
        derived.emplace_back(rule.head.predicate, std::move(head));
      }
    }
    bool grew = false;
    for (auto& [pred, tuple] : derived) grew |= catalog.insert(pred, std::move(tuple));
    if (!grew) break;
  }
  return catalog;
}

}  // namespace lfdl
