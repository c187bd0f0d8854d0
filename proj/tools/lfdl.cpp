#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lfdl/runner.hpp"

namespace {

// FILE:REL, splitting on the last colon.
lfdl::RunConfig::FactsFile parse_facts_arg(const std::string& arg) {
  const size_t colon = arg.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == arg.size())
    throw CLI::ValidationError("--facts", "expected FILE:REL, got '" + arg + "'");
  return {arg.substr(0, colon), arg.substr(colon + 1), std::nullopt};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Datalog engine with a leapfrog triejoin core"};
  app.require_subcommand(1);

  lfdl::RunConfig config;
  std::vector<std::string> facts_args;
  std::string engine = "lftj";

  CLI::App* run = app.add_subcommand("run", "evaluate a program and print results");
  run->add_option("--program", config.program_path, "Datalog program file")->required();
  run->add_option("--facts", facts_args, "CSV fact file as FILE:REL (repeatable)");
  run->add_option("--query", [&config](const std::vector<std::string>& vals) {
       config.query = vals.front();
       return true;
     },
     "query body, e.g. 'p(X,Y), q(X,Z)'");
  run->add_option("--engine", engine, "join engine")
      ->check(CLI::IsMember({"lftj", "generic", "naive"}))
      ->capture_default_str();
  run->add_flag("--trace", config.trace, "log lower-bound raises during evaluation");
  run->add_flag("--explain", config.explain, "print join plans");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const std::string& arg : facts_args) config.facts.push_back(parse_facts_arg(arg));
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  if (engine == "generic")
    config.engine = lfdl::RunConfig::Engine::Generic;
  else if (engine == "naive")
    config.engine = lfdl::RunConfig::Engine::Naive;

  return lfdl::run(config, std::cout, std::cerr);
}
