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


// End-to-end runs over a parsed problem: prove, suggest instantiations,
// replay from the instantiated facts, and benchmark a directory.

#ifndef PARAKEET_PIPELINE_H_
#define PARAKEET_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "parakeet/clausifier.h"
#include "parakeet/decoder.h"
#include "parakeet/parser.h"
#include "parakeet/prover.h"

namespace parakeet {

enum class ExtMode { kAuto, kOn, kOff };

struct RunOptions {
  ProverLimits limits;
  // Override the problem's own options when set.
  std::optional<LambdaMode> lambda;
  std::optional<bool> undefined;
  // kAuto follows the problem's ext option for the original search.
  ExtMode ext = ExtMode::kAuto;
  double replay_factor = 5.0;
  double replay_min_seconds = 1.0;
};

struct RunReport {
  std::string file;
  // refutation, saturated, resource-out or error.
  std::string outcome;
  std::string error;
  bool used_ext = false;
  SearchStats stats;
  std::string proof_text;

  bool instantiated = false;
  std::vector<Instantiation> instantiations;
  // Rendered instantiations; empty when no fact needs instantiating.
  std::vector<std::string> suggestions;
  std::vector<std::string> decode_errors;
  std::uint64_t steps_before = 0;
  std::uint64_t steps_after = 0;
  bool transform_ok = false;
  bool subst_free = false;
  std::string transform_error;

  bool replayed = false;
  std::string replay_outcome;
  // Stats of the last replay round and totals over all rounds.
  SearchStats replay_stats;
  std::uint64_t replay_generated_total = 0;
  int replay_rounds = 0;
  bool replay_used_ext = false;
};

int exit_code(const RunReport& report);

EncodedProblem encode(const Problem& problem, const RunOptions& options);

RunReport run_prove(const Problem& problem, const RunOptions& options);
RunReport run_instantiate(const Problem& problem, const RunOptions& options);
RunReport run_replay(const Problem& problem, const RunOptions& options);

// Substitutes each instantiation into its fact. A fact with several
// instantiations appears once per instantiation; facts without any stay
// unchanged.
Problem instantiate_problem(const Problem& problem,
                            const std::vector<Instantiation>& insts);

// Replays every problem file of `dir` (sorted by name) with up to `jobs`
// threads. Unparsable files yield an error row.
std::vector<RunReport> run_bench(const std::filesystem::path& dir,
                                 const RunOptions& options, unsigned jobs);

struct BenchSummary {
  std::size_t problems = 0;
  std::size_t refuted = 0;
  std::size_t transformed = 0;
  std::size_t subst_free = 0;
  std::size_t replay_refuted = 0;
  // Problems whose replay generated no more clauses than the original.
  std::size_t replay_not_worse = 0;
  // Median of 1 - replay/original generated clauses over refuted problems.
  double median_reduction = 0.0;
};
BenchSummary summarize(const std::vector<RunReport>& reports);

enum class OutputFormat { kText, kCsv, kJson };

std::string format_report(const RunReport& report, OutputFormat format);
std::string format_bench(const std::vector<RunReport>& reports, OutputFormat format);

}  // namespace parakeet

#endif  // PARAKEET_PIPELINE_H_
