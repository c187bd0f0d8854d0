#include "lfdl/plan.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace lfdl {

JoinPlan make_plan(const std::vector<Atom>& body, const Catalog& catalog) {
  JoinPlan plan;

  for (const Atom& a : body) {
    if (!catalog.has(a.predicate))
      throw EvalError("unknown predicate " + a.predicate + "/" + std::to_string(a.arity()));
    if (catalog.arity(a.predicate) != a.arity())
      throw EvalError("predicate " + a.predicate + " used with arity " +
                      std::to_string(a.arity()) + ", declared with arity " +
                      std::to_string(catalog.arity(a.predicate)));
  }

  // Classes in order of first textual occurrence.
  std::map<std::string, size_t> rank_of;
  for (size_t ai = 0; ai < body.size(); ++ai) {
    for (size_t pi = 0; pi < body[ai].args.size(); ++pi) {
      const Term& t = body[ai].args[pi];
      if (!t.is_variable()) continue;
      auto [it, inserted] = rank_of.try_emplace(t.var, plan.classes.size());
      if (inserted) plan.classes.push_back(EqClass{it->second, t.var, {}});
      plan.classes[it->second].occurrences.push_back(Occurrence{ai, pi});
    }
  }

  // Per-atom permutation: constants first (they pin the top trie levels),
  // then variables by class rank; original position breaks ties.
  for (size_t ai = 0; ai < body.size(); ++ai) {
    const Atom& a = body[ai];
    AtomPlan ap;
    ap.atom_index = ai;
    ap.predicate = a.predicate;
    ap.perm.resize(a.arity());
    std::iota(ap.perm.begin(), ap.perm.end(), size_t{0});
    auto sort_key = [&](size_t pos) -> std::pair<size_t, size_t> {
      const Term& t = a.args[pos];
      if (!t.is_variable()) return {0, pos};
      return {1 + rank_of.at(t.var), pos};
    };
    std::sort(ap.perm.begin(), ap.perm.end(),
              [&](size_t x, size_t y) { return sort_key(x) < sort_key(y); });
    for (size_t level = 0; level < a.arity(); ++level) {
      const Term& t = a.args[ap.perm[level]];
      if (t.is_variable())
        ap.levels.push_back(AtomPlan::LevelSpec{false, Value(), rank_of.at(t.var)});
      else
        ap.levels.push_back(AtomPlan::LevelSpec{true, t.constant, 0});
    }
    plan.atoms.push_back(std::move(ap));
  }

  plan.participants.resize(plan.classes.size());
  for (size_t ai = 0; ai < plan.atoms.size(); ++ai) {
    size_t last_rank = 0;
    bool seen_var = false;
    for (const auto& level : plan.atoms[ai].levels) {
      if (level.is_constant) {
        assert(!seen_var);  // constants only appear above all variable levels
        continue;
      }
      assert(!seen_var || level.class_rank >= last_rank);
      if (!seen_var || level.class_rank != last_rank) {
        plan.participants[level.class_rank].push_back(ai);
      }
      last_rank = level.class_rank;
      seen_var = true;
    }
  }
  return plan;
}

std::string explain(const JoinPlan& plan) {
  std::ostringstream os;
  os << "% plan: " << plan.atoms.size() << " atoms, " << plan.classes.size()
     << " classes\n";
  for (const AtomPlan& ap : plan.atoms) {
    os << "% atom " << ap.atom_index << ": " << ap.predicate << "/" << ap.levels.size()
       << " perm=[";
    for (size_t i = 0; i < ap.perm.size(); ++i) os << (i ? "," : "") << ap.perm[i];
    os << "] levels=[";
    for (size_t i = 0; i < ap.levels.size(); ++i) {
      os << (i ? "," : "");
      if (ap.levels[i].is_constant)
        os << ap.levels[i].constant;
      else
        os << plan.classes[ap.levels[i].class_rank].var;
    }
    os << "]\n";
  }
  for (const EqClass& c : plan.classes) {
    os << "% class " << c.rank << " " << c.var << ": occurrences=[";
    for (size_t i = 0; i < c.occurrences.size(); ++i)
      os << (i ? "," : "") << c.occurrences[i].atom << "." << c.occurrences[i].arg;
    os << "] iterators=[";
    const auto& parts = plan.participants[c.rank];
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << "]\n";
  }
  return os.str();
}

}  // namespace lfdl
