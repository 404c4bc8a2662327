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


#include <gtest/gtest.h>

#include "json.hpp"
#include "parakeet/pipeline.h"
#include "support/generators.h"

namespace parakeet {
namespace {

using testing::load_problem;

TEST(PipelineTest, WorkedExampleSuggestions) {
  RunReport r = run_instantiate(load_problem("worked_example.prob"), {});
  EXPECT_EQ(r.outcome, "refutation");
  EXPECT_EQ(exit_code(r), 0);
  EXPECT_TRUE(r.transform_ok);
  EXPECT_TRUE(r.subst_free);
  EXPECT_EQ(r.suggestions, (std::vector<std::string>{"F1 with {m -> 0, n -> Suc(x)}",
                                                     "F2 with {}", "F3 with {n -> x}"}));
  EXPECT_LE(r.steps_after, r.steps_before);
}

TEST(PipelineTest, SurjectiveComposite) {
  RunReport r = run_instantiate(load_problem("surj_compose.prob"), {});
  ASSERT_EQ(r.outcome, "refutation");
  EXPECT_EQ(r.suggestions,
            (std::vector<std::string>{"surjD with {f -> \\a. g (Suc a), y -> Suc (g _)}"}));
}

TEST(PipelineTest, EvenPowerMerges) {
  RunReport r = run_instantiate(load_problem("even_power.prob"), {});
  ASSERT_EQ(r.outcome, "refutation");
  EXPECT_EQ(r.suggestions, (std::vector<std::string>{"F with {n -> 2, x -> a, y -> b}"}));
}

TEST(PipelineTest, UndefinedSwitch) {
  RunReport on = run_instantiate(load_problem("plus_cancel.prob"), {});
  ASSERT_EQ(on.outcome, "refutation");
  ASSERT_FALSE(on.instantiations.empty());
  EXPECT_NE(on.suggestions.front().find("x -> undefined"), std::string::npos);

  RunOptions opts;
  opts.undefined = false;
  RunReport off = run_instantiate(load_problem("plus_cancel.prob"), opts);
  EXPECT_NE(off.suggestions.front().find("x -> _"), std::string::npos);
}

TEST(PipelineTest, Saturation) {
  RunReport r = run_prove(load_problem("unprovable.prob"), {});
  EXPECT_EQ(r.outcome, "saturated");
  EXPECT_EQ(exit_code(r), 1);
}

TEST(PipelineTest, ResourceOut) {
  RunOptions opts;
  opts.limits.max_generated_clauses = 1;
  RunReport r = run_prove(load_problem("worked_example.prob"), opts);
  EXPECT_EQ(r.outcome, "resource-out");
  EXPECT_EQ(exit_code(r), 2);
}

TEST(PipelineTest, ReplaySurjSwapNeedsExt) {
  RunReport r = run_replay(load_problem("surj_swap.prob"), {});
  ASSERT_EQ(r.outcome, "refutation");
  EXPECT_FALSE(r.used_ext);
  EXPECT_EQ(r.replay_outcome, "refutation");
  EXPECT_EQ(r.replay_rounds, 2);
  EXPECT_TRUE(r.replay_used_ext);

  RunOptions off;
  off.ext = ExtMode::kOff;
  RunReport r2 = run_replay(load_problem("surj_swap.prob"), off);
  EXPECT_NE(r2.replay_outcome, "refutation");
}

TEST(PipelineTest, InstantiatedSurjSwap) {
  RunReport without = run_prove(load_problem("surj_swap_instantiated.prob"), {});
  EXPECT_NE(without.outcome, "refutation");
  RunOptions on;
  on.ext = ExtMode::kOn;
  RunReport with = run_prove(load_problem("surj_swap_instantiated.prob"), on);
  EXPECT_EQ(with.outcome, "refutation");
  EXPECT_TRUE(with.used_ext);
}

TEST(PipelineTest, EtaExtOnlyNeededBeforeInstantiation) {
  RunReport r = run_replay(load_problem("eta_ext.prob"), {});
  ASSERT_EQ(r.outcome, "refutation");
  EXPECT_TRUE(r.used_ext);
  EXPECT_EQ(r.suggestions, (std::vector<std::string>{"F with {f -> g}"}));
  EXPECT_EQ(r.replay_outcome, "refutation");
  EXPECT_EQ(r.replay_rounds, 1);
  EXPECT_FALSE(r.replay_used_ext);
}

TEST(PipelineTest, InstantiateProblem) {
  Problem p = load_problem("worked_example.prob");
  RunReport r = run_instantiate(p, {});
  Problem q = instantiate_problem(p, r.instantiations);
  ASSERT_EQ(q.facts.size(), 3u);
  EXPECT_EQ(to_string(q.facts[0].formula, q.style), "less(0, Suc(x)) -> less(Suc(0), Suc(Suc(x)))");
  EXPECT_TRUE(q.facts[2].free_vars.empty());
}

TEST(PipelineTest, Deterministic) {
  Problem p = load_problem("surj_compose.prob");
  RunReport a = run_replay(p, {});
  RunReport b = run_replay(p, {});
  EXPECT_EQ(a.proof_text, b.proof_text);
  EXPECT_EQ(a.stats.generated, b.stats.generated);
  EXPECT_EQ(a.suggestions, b.suggestions);
  EXPECT_EQ(a.replay_generated_total, b.replay_generated_total);
}

TEST(PipelineTest, CombinatorModeAgrees) {
  RunOptions opts;
  opts.lambda = LambdaMode::kCombinators;
  RunReport r = run_instantiate(load_problem("surj_compose.prob"), opts);
  ASSERT_EQ(r.outcome, "refutation");
  EXPECT_TRUE(r.transform_ok);
  ASSERT_EQ(r.suggestions.size(), 1u);
  EXPECT_EQ(r.suggestions[0].rfind("surjD with {f -> \\a. g (Suc a)", 0), 0u);
}

TEST(PipelineTest, JsonReport) {
  RunReport r = run_replay(load_problem("worked_example.prob"), {});
  auto j = nlohmann::json::parse(format_report(r, OutputFormat::kJson));
  EXPECT_EQ(j.at("outcome"), "refutation");
  EXPECT_EQ(j.at("suggestions").size(), 3u);
}

TEST(PipelineTest, BenchCorpus) {
  std::vector<RunReport> reports = run_bench(testing::data_dir() / "corpus", {}, 2);
  BenchSummary s = summarize(reports);
  EXPECT_EQ(s.problems, reports.size());
  EXPECT_GE(s.problems, 10u);
  EXPECT_EQ(s.refuted, s.problems);
  EXPECT_EQ(s.transformed, s.refuted);
  EXPECT_EQ(s.subst_free, s.refuted);
  std::string csv = format_bench(reports, OutputFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(reports.size() + 1));
}

}  // namespace
}  // namespace parakeet
