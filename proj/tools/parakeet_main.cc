/* Copyright 2026 The Parakeet Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


// parakeet: prove problems, suggest fact instantiations, replay and
// benchmark.
//
//   parakeet prove FILE
//   parakeet instantiate FILE
//   parakeet replay FILE
//   parakeet bench DIR
//
// Exit status: 0 refutation, 1 saturated, 2 resource-out, 3 input error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "parakeet/pipeline.h"

namespace {

using parakeet::ExtMode;
using parakeet::LambdaMode;
using parakeet::OutputFormat;

struct Flags {
  std::uint64_t limit_clauses = 100000;
  double limit_seconds = 10.0;
  std::string lambda;
  std::string ext = "auto";
  std::string undefined;
  unsigned jobs = 1;
  std::string format = "text";
  std::string path;
};

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--limit-clauses", flags.limit_clauses, "Generated-clause limit")
      ->capture_default_str();
  cmd->add_option("--limit-seconds", flags.limit_seconds, "Time limit per search")
      ->capture_default_str();
  cmd->add_option("--lambda", flags.lambda, "Lambda encoding")
      ->check(CLI::IsMember({"lifting", "combinators"}));
  cmd->add_option("--ext", flags.ext, "Extensionality axiom")
      ->check(CLI::IsMember({"auto", "on", "off"}))
      ->capture_default_str();
  cmd->add_option("--undefined", flags.undefined, "Bind unconstrained variables to undefined")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

parakeet::RunOptions run_options(const Flags& flags) {
  parakeet::RunOptions options;
  options.limits.max_generated_clauses = flags.limit_clauses;
  options.limits.max_seconds = flags.limit_seconds;
  if (const char* seed = std::getenv("PARAKEET_SEED")) {
    options.limits.seed = std::strtoull(seed, nullptr, 10);
  }
  if (flags.lambda == "lifting") options.lambda = LambdaMode::kLifting;
  if (flags.lambda == "combinators") options.lambda = LambdaMode::kCombinators;
  if (!flags.undefined.empty()) options.undefined = flags.undefined == "on";
  static const std::map<std::string, ExtMode> kExt = {
      {"auto", ExtMode::kAuto}, {"on", ExtMode::kOn}, {"off", ExtMode::kOff}};
  options.ext = kExt.at(flags.ext);
  return options;
}

OutputFormat output_format(const Flags& flags) {
  if (flags.format == "csv") return OutputFormat::kCsv;
  if (flags.format == "json") return OutputFormat::kJson;
  return OutputFormat::kText;
}

int run_file(const Flags& flags, const std::string& command) {
  parakeet::Problem problem;
  try {
    problem = parakeet::parse_problem_file(flags.path);
  } catch (const std::exception& e) {
    std::cerr << flags.path << ":" << e.what() << "\n";
    return 3;
  }
  parakeet::RunOptions options = run_options(flags);
  parakeet::RunReport report;
  if (command == "prove") {
    report = parakeet::run_prove(problem, options);
  } else if (command == "instantiate") {
    report = parakeet::run_instantiate(problem, options);
  } else {
    report = parakeet::run_replay(problem, options);
  }
  report.file = flags.path;
  std::cout << parakeet::format_report(report, output_format(flags));
  return parakeet::exit_code(report);
}

int run_bench(const Flags& flags) {
  std::error_code ec;
  if (!std::filesystem::is_directory(flags.path, ec)) {
    std::cerr << flags.path << ": not a directory\n";
    return 3;
  }
  auto reports = parakeet::run_bench(flags.path, run_options(flags), flags.jobs);
  std::cout << parakeet::format_bench(reports, output_format(flags));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order prover with instantiation suggestions"};
  app.require_subcommand(1);
  Flags flags;
  std::map<CLI::App*, std::string> commands;
  for (const auto& [name, help] : std::map<std::string, std::string>{
           {"prove", "Prove a problem and print the proof"},
           {"instantiate", "Suggest instantiations of the facts a proof uses"},
           {"replay", "Prove again from the instantiated facts"}}) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, flags);
    cmd->add_option("file", flags.path, "Problem file")->required();
    commands[cmd] = name;
  }
  CLI::App* bench = app.add_subcommand("bench", "Replay every problem of a directory");
  add_common(bench, flags);
  bench->add_option("--jobs", flags.jobs, "Parallel problems")->capture_default_str();
  bench->add_option("dir", flags.path, "Problem directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  if (bench->parsed()) return run_bench(flags);
  for (const auto& [cmd, name] : commands) {
    if (cmd->parsed()) return run_file(flags, name);
  }
  return 3;
}
