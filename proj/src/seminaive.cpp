#include "lfdl/seminaive.hpp"

#include <cassert>

#include "lfdl/plan.hpp"

namespace lfdl {

namespace {

// Delta relations live in the catalog under names no surface syntax can
// produce.
std::string delta_name(const std::string& predicate) { return "@" + predicate; }

void define_checked(Catalog& catalog, const std::string& name, size_t arity) {
  if (catalog.has(name) && catalog.arity(name) != arity)
    throw EvalError("predicate " + name + " used with arity " + std::to_string(arity) +
                    ", declared with arity " + std::to_string(catalog.arity(name)));
  catalog.define(name, arity);
}

Tuple instantiate_head(const Atom& head, const std::map<std::string, size_t>& rank_of,
                       const Binding& binding) {
  Tuple tuple;
  tuple.reserve(head.arity());
  for (const Term& t : head.args)
    tuple.push_back(t.is_variable() ? binding[rank_of.at(t.var)] : t.constant);
  return tuple;
}

}  // namespace

Catalog evaluate_seminaive(const Program& program, Catalog catalog, JoinCore core,
                           std::ostream* trace, const RoundObserver& observer) {
  for (const Atom& fact : program.facts) {
    define_checked(catalog, fact.predicate, fact.arity());
    Tuple tuple;
    for (const Term& t : fact.args) tuple.push_back(t.constant);
    catalog.insert(fact.predicate, std::move(tuple));
  }

  std::set<std::string> idb;
  for (const Rule& rule : program.rules) {
    define_checked(catalog, rule.head.predicate, rule.head.arity());
    idb.insert(rule.head.predicate);
  }
  for (const Rule& rule : program.rules)
    for (const Atom& atom : rule.body) {
      if (!catalog.has(atom.predicate))
        throw EvalError("unknown predicate " + atom.predicate + "/" +
                        std::to_string(atom.arity()));
      if (catalog.arity(atom.predicate) != atom.arity())
        throw EvalError("predicate " + atom.predicate + " used with arity " +
                        std::to_string(atom.arity()) + ", declared with arity " +
                        std::to_string(catalog.arity(atom.predicate)));
    }
  for (const std::string& p : idb) catalog.define(delta_name(p), catalog.arity(p));

  // Plans survive the whole fixpoint: one per rule for the first round, and
  // one per rule-defined body atom for the delta rounds.
  struct RulePlans {
    const Rule* rule;
    std::map<std::string, size_t> rank_of;
    JoinPlan base;
    std::vector<std::pair<size_t, JoinPlan>> delta_variants;  // (atom index, plan)
  };
  std::vector<RulePlans> plans;
  for (const Rule& rule : program.rules) {
    RulePlans rp;
    rp.rule = &rule;
    rp.base = make_plan(rule.body, catalog);
    for (const EqClass& c : rp.base.classes) rp.rank_of[c.var] = c.rank;
    for (size_t j = 0; j < rule.body.size(); ++j) {
      if (!idb.count(rule.body[j].predicate)) continue;
      std::vector<Atom> variant = rule.body;
      variant[j].predicate = delta_name(variant[j].predicate);
      rp.delta_variants.emplace_back(j, make_plan(variant, catalog));
    }
    plans.push_back(std::move(rp));
  }

  std::map<std::string, std::set<Tuple>> delta;
  auto derive = [&](const RulePlans& rp, const JoinPlan& plan,
                    std::map<std::string, std::set<Tuple>>& fresh) {
    auto stream = execute_plan(plan, catalog, core, trace);
    while (stream.next()) {
      Tuple head = instantiate_head(rp.rule->head, rp.rank_of, stream.value());
      if (!catalog.tuples(rp.rule->head.predicate).count(head))
        fresh[rp.rule->head.predicate].insert(std::move(head));
    }
  };

  // First round: every rule once over the initial facts.
  for (const RulePlans& rp : plans) derive(rp, rp.base, delta);

  size_t round = 0;
  for (;;) {
    for (auto& [pred, fresh] : delta)
      for (const Tuple& t : fresh) catalog.insert(pred, t);
    if (observer) observer(round, delta);
    bool any = false;
    for (const auto& [pred, fresh] : delta) any = any || !fresh.empty();
    if (!any) break;

    for (const std::string& p : idb) {
      auto it = delta.find(p);
      std::vector<Tuple> rows;
      if (it != delta.end()) rows.assign(it->second.begin(), it->second.end());
      catalog.replace(delta_name(p), catalog.arity(p), std::move(rows));
    }

    std::map<std::string, std::set<Tuple>> next;
    for (const RulePlans& rp : plans)
      for (const auto& [j, plan] : rp.delta_variants) {
        if (!catalog.tuple_count(delta_name(rp.rule->body[j].predicate))) continue;
        derive(rp, plan, next);
      }
    delta = std::move(next);
    ++round;
  }

  for (const std::string& p : idb) catalog.erase(delta_name(p));
  return catalog;
}

}  // namespace lfdl
