#include "lfdl/join.hpp"

#include <cassert>
#include <memory>
#include <ostream>
#include <utility>

#include "lfdl/leapfrog.hpp"
#include "lfdl/solver.hpp"
#include "lfdl/trie.hpp"

namespace lfdl {

namespace {

struct AtomExec {
  const AtomPlan* plan;
  TrieIterator it;
};

struct Exec {
  const JoinPlan* plan;
  JoinCore core;
  std::ostream* trace;
  std::vector<AtomExec> atoms;
  Binding binding;
};

void trace_raise(std::ostream& os, const std::string& var, size_t iterator_index,
                 const Value& old_key, const std::optional<Value>& new_key,
                 const Value& target) {
  os << "% raise " << var << "[" << iterator_index << "]: " << old_key << " -> ";
  if (new_key)
    os << *new_key;
  else
    os << "end";
  os << " (target " << target << ")\n";
}

/// Logs every seek as a lower-bound raise on the wrapped level.
class TracingIterator final : public LinearIterator {
 public:
  TracingIterator(LinearIterator& inner, std::ostream& os, std::string var, size_t index)
      : inner_(&inner), os_(&os), var_(std::move(var)), index_(index) {}

  bool at_end() const override { return inner_->at_end(); }
  Value key() const override { return inner_->key(); }
  void next() override { inner_->next(); }
  void seek(const Value& t) override {
    const Value old_key = inner_->key();
    inner_->seek(t);
    std::optional<Value> new_key;
    if (!inner_->at_end()) new_key = inner_->key();
    trace_raise(*os_, var_, index_, old_key, new_key, t);
  }
  std::span<const Value> remaining() const override { return inner_->remaining(); }

 private:
  LinearIterator* inner_;
  std::ostream* os_;
  std::string var_;
  size_t index_;
};

/// Walks the atom past its constant prefix. Leaves the cursor on the first
/// variable level, or fully bound for a ground atom. False when some
/// constant has no matching key.
bool bind_constant_prefix(AtomExec& a) {
  a.it.open();
  for (size_t level = 0;; ++level) {
    const auto& spec = a.plan->levels[level];
    if (!spec.is_constant) return true;
    a.it.seek(spec.constant);
    if (a.it.at_end() || a.it.key() != spec.constant) return false;
    if (level + 1 == a.plan->levels.size()) return true;
    a.it.open();
  }
}

/// After the class join placed the cursor on `v` at the atom's first level
/// of class `ci`, checks any deeper occurrences of the same class (repeated
/// variable) by seek-and-check, then opens into the next level so the next
/// class finds its cursor ready. Returns (matched, number of opens done);
/// the caller unwinds with that many ups.
std::pair<bool, int> descend_after_match(AtomExec& a, size_t ci, const Value& v) {
  const auto& levels = a.plan->levels;
  size_t level = static_cast<size_t>(a.it.depth());
  assert(!levels[level].is_constant && levels[level].class_rank == ci);
  assert(a.it.key() == v);
  int opens = 0;
  while (level + 1 < levels.size() && levels[level + 1].class_rank == ci) {
    assert(!levels[level + 1].is_constant);
    a.it.open();
    ++opens;
    a.it.seek(v);
    if (a.it.at_end() || a.it.key() != v) return {false, opens};
    ++level;
  }
  if (level + 1 < levels.size()) {
    a.it.open();
    ++opens;
  }
  return {true, opens};
}

/// The values the class variable can take, given the current cursor
/// positions: the unary join of the participant levels. Leapfrog positions
/// the cursors as a side effect; the solver cores compute the stream on
/// materialized domains and reposition the cursors per value.
Generator<Value> class_values(Exec& ex, size_t ci, std::vector<LinearIterator*> views) {
  const std::string& var = ex.plan->classes[ci].var;

  if (ex.core == JoinCore::Leapfrog) {
    std::vector<TracingIterator> traced;
    std::vector<LinearIterator*> inputs;
    if (ex.trace) {
      traced.reserve(views.size());
      for (size_t i = 0; i < views.size(); ++i)
        traced.emplace_back(*views[i], *ex.trace, var, i);
      for (TracingIterator& t : traced) inputs.push_back(&t);
    } else {
      inputs = views;
    }
    auto stream = leapfrog_join(std::move(inputs));
    while (stream.next()) co_yield stream.value();
    co_return;
  }

  // Solver-backed: snapshot each level as an explicit domain and search.
  std::vector<Domain> domains;
  domains.reserve(views.size());
  for (LinearIterator* view : views) {
    auto keys = view->remaining();
    domains.push_back(Domain::from_sorted(std::vector<Value>(keys.begin(), keys.end())));
  }
  DomainStore store{std::move(domains)};

  RaiseHook hook;
  if (ex.trace) {
    std::ostream* os = ex.trace;
    hook = [os, &var](const RaiseEvent& ev) {
      trace_raise(*os, var, ev.var.index, ev.old_lb, ev.new_lb, ev.target);
    };
  }

  auto reposition = [&views](const Value& v) {
    for (LinearIterator* view : views) {
      view->seek(v);
      assert(!view->at_end() && view->key() == v);
    }
  };

  if (ex.core == JoinCore::Generic) {
    std::vector<VarId> vars;
    for (size_t i = 0; i < views.size(); ++i) vars.push_back(VarId{i});
    std::vector<PropagatorPtr> props{std::make_shared<AllEqual>(std::move(vars), hook)};
    auto stream = search_generic({}, std::move(props), std::move(store));
    while (stream.next()) {
      const Value v = stream.value().domain(VarId{0}).lower_bound();
      reposition(v);
      co_yield v;
    }
  } else {
    auto stream = search_tailrec(std::move(store), hook);
    while (stream.next()) {
      const Value v = stream.value()[0];
      reposition(v);
      co_yield v;
    }
  }
}

Generator<Binding> run_class(Exec& ex, size_t ci) {
  const std::vector<size_t>& parts = ex.plan->participants[ci];
  assert(!parts.empty());

  std::vector<TrieCursor> cursors;
  cursors.reserve(parts.size());
  for (size_t ai : parts) cursors.emplace_back(ex.atoms[ai].it);
  std::vector<LinearIterator*> views;
  views.reserve(parts.size());
  for (TrieCursor& c : cursors) views.push_back(&c);

  auto values = class_values(ex, ci, std::move(views));
  std::vector<int> opens(parts.size(), 0);
  while (values.next()) {
    const Value v = values.value();
    size_t descended = 0;
    bool matched = true;
    for (size_t i = 0; i < parts.size(); ++i) {
      auto [ok, count] = descend_after_match(ex.atoms[parts[i]], ci, v);
      opens[i] = count;
      ++descended;
      if (!ok) {
        matched = false;
        break;
      }
    }
    if (matched) {
      ex.binding[ci] = v;
      if (ci + 1 == ex.plan->classes.size()) {
        co_yield ex.binding;
      } else {
        auto sub = run_class(ex, ci + 1);
        while (sub.next()) co_yield sub.value();
      }
    }
    for (size_t i = 0; i < descended; ++i)
      for (int j = 0; j < opens[i]; ++j) ex.atoms[parts[i]].it.up();
  }
}

}  // namespace

Generator<Binding> execute_plan(const JoinPlan& plan, const Catalog& catalog,
                                JoinCore core, std::ostream* trace) {
  Exec ex{&plan, core, trace, {}, Binding(plan.classes.size())};
  ex.atoms.reserve(plan.atoms.size());
  for (const AtomPlan& ap : plan.atoms)
    ex.atoms.push_back(AtomExec{&ap, TrieIterator(catalog.trie(ap.predicate, ap.perm))});

  for (AtomExec& a : ex.atoms)
    if (!bind_constant_prefix(a)) co_return;

  if (plan.classes.empty()) {
    // Constant-only body and every check passed: the neutral join result.
    co_yield Binding{};
    co_return;
  }

  auto stream = run_class(ex, 0);
  while (stream.next()) co_yield stream.value();
}

}  // namespace lfdl
