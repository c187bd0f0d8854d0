#ifndef LFDL_RUNNER_HPP
#define LFDL_RUNNER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lfdl {

/// One full CLI invocation, factored out so tests can drive it directly.
struct RunConfig {
  struct FactsFile {
    std::string path;
    std::string relation;
    std::optional<size_t> arity;  // checked against the file when set
  };

  enum class Engine { Lftj, Generic, Naive };

  std::string program_path;
  std::vector<FactsFile> facts;
  Engine engine = Engine::Lftj;
  std::optional<std::string> query;  // absent: print all derived relations
  bool trace = false;
  bool explain = false;
};

/// Evaluates and prints. Results are tab-separated rows sorted by value
/// order per column; without a query, one block per derived relation headed
/// by `% name/arity`. Identical inputs produce byte-identical output.
/// Returns 0 on success, 1 on parse/validation errors, 2 on I/O errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lfdl

#endif
