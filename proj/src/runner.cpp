#include "lfdl/runner.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "lfdl/oracle.hpp"
#include "lfdl/parser.hpp"
#include "lfdl/plan.hpp"
#include "lfdl/seminaive.hpp"

namespace lfdl {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buffer.str();
}

Value parse_csv_value(const std::string& field) {
  if (!field.empty()) {
    size_t i = field[0] == '-' ? 1 : 0;
    if (i < field.size() &&
        std::all_of(field.begin() + i, field.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      try {
        return Value::integer(std::stoll(field));
      } catch (const std::out_of_range&) {
        // falls through to symbol
      }
    }
  }
  return Value::symbol(field);
}

void load_csv(Catalog& catalog, const RunConfig::FactsFile& file) {
  const std::string text = read_file(file.path);
  std::istringstream lines(text);
  std::string line;
  size_t lineno = 0;
  std::optional<size_t> arity = file.arity;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Tuple tuple;
    std::string field;
    std::istringstream fields(line);
    while (std::getline(fields, field, ',')) tuple.push_back(parse_csv_value(field));
    if (line.back() == ',') tuple.push_back(Value::symbol(""));
    if (!arity) arity = tuple.size();
    if (tuple.size() != *arity)
      throw EvalError(file.path + ":" + std::to_string(lineno) + ": row has " +
                      std::to_string(tuple.size()) + " fields, expected " +
                      std::to_string(*arity));
    if (!catalog.has(file.relation)) catalog.define(file.relation, *arity);
    if (catalog.arity(file.relation) != *arity)
      throw EvalError(file.path + ": relation " + file.relation +
                      " already has arity " + std::to_string(catalog.arity(file.relation)));
    catalog.insert(file.relation, std::move(tuple));
  }
  if (arity && !catalog.has(file.relation)) catalog.define(file.relation, *arity);
}

void print_row(std::ostream& out, const std::vector<Value>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out << '\t';
    out << row[i];
  }
  out << '\n';
}

void run_query(const RunConfig& config, const Catalog& catalog, std::ostream& out) {
  const std::vector<Atom> body = parse_body(*config.query);
  if (config.explain) out << explain(make_plan(body, catalog));
  std::set<Binding> results;
  if (config.engine == RunConfig::Engine::Naive) {
    results = nested_loop_join(body, catalog);
  } else {
    const JoinCore core = config.engine == RunConfig::Engine::Generic ? JoinCore::Generic
                                                                      : JoinCore::Leapfrog;
    auto stream = execute_plan(make_plan(body, catalog), catalog, core,
                               config.trace ? &out : nullptr);
    while (stream.next()) results.insert(stream.value());
  }
  for (const Binding& row : results) print_row(out, row);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string text = read_file(config.program_path);
    Program program;
    try {
      program = parse_program(text);
    } catch (const ParseError& e) {
      err << config.program_path << ":" << e.what() << "\n";
      return 1;
    }
    Catalog catalog;
    for (const auto& file : config.facts) load_csv(catalog, file);

    std::set<std::string> derived;
    for (const Rule& rule : program.rules) derived.insert(rule.head.predicate);

    if (config.engine == RunConfig::Engine::Naive) {
      catalog = naive_eval(program, std::move(catalog));
    } else {
      const JoinCore core = config.engine == RunConfig::Engine::Generic
                                ? JoinCore::Generic
                                : JoinCore::Leapfrog;
      catalog = evaluate_seminaive(program, std::move(catalog), core,
                                   config.trace ? &out : nullptr);
    }

    if (config.explain && !config.query) {
      for (const Rule& rule : program.rules) out << explain(make_plan(rule.body, catalog));
    }

    if (config.query) {
      run_query(config, catalog, out);
    } else {
      for (const std::string& name : derived) {
        out << "% " << name << "/" << catalog.arity(name) << "\n";
        for (const Tuple& tuple : catalog.tuples(name)) print_row(out, tuple);
      }
    }
    return 0;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "query:" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lfdl
