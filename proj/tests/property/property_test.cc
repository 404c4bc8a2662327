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

#include <random>
#include <set>

#include "parakeet/clausifier.h"
#include "parakeet/decoder.h"
#include "parakeet/merge.h"
#include "parakeet/pipeline.h"
#include "parakeet/proof_io.h"
#include "support/generators.h"

namespace parakeet {
namespace {

using testing::Rng;

TEST(CompositionProperty, AppliesRightThenLeft) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    Substitution s1 = testing::random_substitution(rng);
    Substitution s2 = testing::random_substitution(rng);
    Substitution s3 = testing::random_substitution(rng);
    Term t = testing::random_term(rng, 4);
    ASSERT_EQ(compose(s1, s2).apply(t), s1.apply(s2.apply(t))) << "case " << i;
    ASSERT_EQ(compose(compose(s1, s2), s3).apply(t), compose(s1, compose(s2, s3)).apply(t))
        << "case " << i;
    ASSERT_EQ(compose(Substitution{}, s1).apply(t), s1.apply(t));
    ASSERT_EQ(compose(s1, Substitution{}).apply(t), s1.apply(t));
  }
}

void check_round_trips(LambdaMode mode, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    SurfaceTerm t = testing::random_surface_term(rng, 4, false);
    SurfaceTerm back = testing::encode_decode(t, mode);
    ASSERT_EQ(back, t) << "case " << i << ": " << to_string(t) << " vs " << to_string(back);
  }
  for (int i = 0; i < 1000; ++i) {
    SurfaceTerm t = testing::random_surface_term(rng, 4, true);
    SurfaceTerm back = testing::encode_decode(t, mode);
    ASSERT_TRUE(alpha_equal(back, beta_eta_normalize(t)))
        << "case " << i << ": " << to_string(t) << " vs " << to_string(back);
  }
}

TEST(RoundTripProperty, Lifting) { check_round_trips(LambdaMode::kLifting, 2); }
TEST(RoundTripProperty, Combinators) { check_round_trips(LambdaMode::kCombinators, 3); }

TEST(TransformProperty, Corpus) {
  for (const auto& path : testing::corpus_files()) {
    Problem p = parse_problem_file(path);
    EncodedProblem e = encode(p, {});
    ProverLimits limits;
    limits.use_ext = p.options.ext.value_or(false);
    ProverOutcome out = prove(e.inputs(), limits);
    const auto* ref = std::get_if<Refutation>(&out);
    ASSERT_NE(ref, nullptr) << path;
    std::vector<InputClause> inputs = e.inputs();
    if (limits.use_ext) inputs = inject_ext(inputs);
    testing::TransformCheck check = testing::check_transform(ref->proof, inputs);
    EXPECT_EQ(check.failure, "") << path;
    EXPECT_LE(check.steps_after, check.steps_before) << path;
  }
}

TEST(TransformProperty, RandomProblems) {
  Rng rng(4);
  ProverLimits limits;
  limits.max_generated_clauses = 5000;
  for (int i = 0; i < 120; ++i) {
    std::vector<InputClause> inputs = testing::random_provable_problem(rng, limits);
    ProverOutcome out = prove(inputs, limits);
    const auto* ref = std::get_if<Refutation>(&out);
    ASSERT_NE(ref, nullptr);
    testing::TransformCheck check = testing::check_transform(ref->proof, inputs);
    ASSERT_EQ(check.failure, "") << "case " << i;
  }
}

TEST(TransformProperty, HandBuiltProof) {
  Proof proof = testing::hand_built_worked_example();
  std::vector<InputClause> inputs;
  for (const auto& [clause, source] : proof.registry) inputs.push_back({clause, source.kind, source.name});
  testing::TransformCheck check = testing::check_transform(proof, inputs);
  EXPECT_EQ(check.failure, "");
  EXPECT_EQ(check.steps_before, 12u);
}

TEST(SoundnessProperty, GroundProblems) {
  Rng rng(5);
  int unsat = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<InputClause> inputs = testing::random_ground_problem(rng);
    bool sat = testing::brute_force_satisfiable(inputs);
    ProverOutcome out = prove(inputs, {});
    if (sat) {
      ASSERT_FALSE(std::holds_alternative<Refutation>(out)) << "case " << i;
    } else {
      ++unsat;
      ASSERT_TRUE(std::holds_alternative<Refutation>(out)) << "case " << i;
      ASSERT_TRUE(check_proof(std::get<Refutation>(out).proof).ok());
    }
  }
  EXPECT_GT(unsat, 20);
  EXPECT_LT(unsat, 180);
}

TEST(MergeProperty, MergedGroupsCoverTheirMembers) {
  Rng rng(6);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int i = 0; i < 500; ++i) {
    std::vector<Instantiation> insts;
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int k = 0; k < n; ++k) {
      Instantiation inst{"F", {}};
      for (const auto& v : vars) {
        if (std::bernoulli_distribution(0.5)(rng)) {
          inst.bindings.emplace_back(v, testing::random_surface_term(rng, 1, false));
        }
      }
      insts.push_back(inst);
    }
    std::vector<Instantiation> groups = merge_all(insts);
    ASSERT_LE(groups.size(), insts.size());
    for (const Instantiation& inst : insts) {
      bool covered = false;
      for (const Instantiation& g : groups) {
        bool all = true;
        for (const auto& [v, t] : inst.bindings) {
          std::map<std::string, std::string> r;
          const SurfaceTerm* gt = g.find(v);
          if (gt == nullptr || !equal_up_to_wildcards(*gt, t, r)) all = false;
        }
        covered = covered || all;
      }
      ASSERT_TRUE(covered) << "case " << i << ": " << to_string(inst);
    }
    for (std::size_t a = 0; a < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        ASSERT_FALSE(merge(groups[a], groups[b]).has_value()) << "case " << i;
      }
    }
  }
}

TEST(ClausifyProperty, InstantiationCommutesWithClausification) {
  Rng rng(7);
  FactDecl fact = testing::load_problem("even_power.prob").facts.at(0);
  const std::vector<std::pair<const char*, const char*>> images = {
      {"a", "a"}, {"b", "b"}, {"2", "2"}, {"neg a", "neg(a)"}, {"pow b 2", "pow(b, 2)"}};
  std::set<std::string> constants = {"a", "b", "2", "neg", "pow"};
  for (int i = 0; i < 100; ++i) {
    SurfaceSubst surface;
    Substitution first_order;
    for (const std::string& v : fact.free_vars) {
      const auto& [s, m] = images[std::uniform_int_distribution<std::size_t>(
          0, images.size() - 1)(rng)];
      surface.emplace(v, parse_surface_term(s, constants));
      first_order.bind(v, parse_marked_term(m));
    }
    Formula inst = substitute(fact.formula, surface);
    ClausifiedFact a = clausify(fact, LambdaMode::kLifting);
    ClausifiedFact b = clausify({"F", inst, free_vars(inst), 1}, LambdaMode::kLifting);
    std::set<Clause> expected;
    for (const Clause& c : a.clauses) expected.insert(c.apply(first_order));
    ASSERT_EQ(std::set<Clause>(b.clauses.begin(), b.clauses.end()), expected) << "case " << i;
  }
}

}  // namespace
}  // namespace parakeet
