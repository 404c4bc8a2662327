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

#include "parakeet/clausifier.h"
#include "parakeet/proof_io.h"
#include "support/generators.h"

namespace parakeet {
namespace {

Clause C(const char* text) { return parse_marked_clause(text); }

FactDecl fact(const std::string& name, const char* text, std::set<std::string> constants) {
  Formula f = parse_formula(text, constants);
  return {name, f, free_vars(f), 1};
}

using VarMap = std::map<std::string, std::string>;

TEST(ClausifyTest, SurjectivityFact) {
  ClausifiedFact cf = clausify(fact("surjD", "surj f -> (?x. f x = y)", {"surj"}),
                               LambdaMode::kLifting);
  ASSERT_EQ(cf.clauses.size(), 1u);
  EXPECT_EQ(cf.clauses[0], C("~surj(?f) | app(?f, sk%1(?f, ?y)) = ?y"));
  EXPECT_EQ(cf.var_maps[0], (VarMap{{"f", "f"}, {"y", "y"}}));
  ASSERT_EQ(cf.skolems.size(), 1u);
  EXPECT_EQ(cf.skolems[0].symbol, "sk%1");
  EXPECT_EQ(cf.skolems[0].deps, (std::vector<std::string>{"f", "y"}));
}

TEST(ClausifyTest, EvenPowerSplitsInTwo) {
  ClausifiedFact cf =
      clausify(testing::load_problem("even_power.prob").facts[0], LambdaMode::kLifting);
  ASSERT_EQ(cf.clauses.size(), 2u);
  EXPECT_EQ(cf.clauses[0], C("~even(?n) | le(0, pow(?x, ?n))"));
  EXPECT_EQ(cf.var_maps[0], (VarMap{{"n", "n"}, {"x", "x"}}));
  EXPECT_EQ(cf.clauses[1], C("~even(?n) | pow(neg(?y), ?n) = pow(?y, ?n)"));
  EXPECT_EQ(cf.var_maps[1], (VarMap{{"n", "n"}, {"y", "y"}}));
}

TEST(ClausifyTest, GroundFact) {
  ClausifiedFact cf = clausify(fact("A", "P a", {"P", "a"}), LambdaMode::kLifting);
  ASSERT_EQ(cf.clauses.size(), 1u);
  EXPECT_EQ(cf.clauses[0], C("P(a)"));
  EXPECT_TRUE(cf.var_maps[0].empty());
}

TEST(ClausifyTest, SkolemDependencies) {
  ClausifiedFact cf = clausify(fact("F", "!x. ?y. R z x y", {"R"}), LambdaMode::kLifting);
  ASSERT_EQ(cf.skolems.size(), 1u);
  EXPECT_EQ(cf.skolems[0].deps, (std::vector<std::string>{"z", "x"}));
  EXPECT_EQ(cf.clauses[0], C("R(?z, ?x, sk%1(?z, ?x))"));
  EXPECT_EQ(cf.var_maps[0], (VarMap{{"z", "z"}}));

  ClausifiedFact closed = clausify(fact("G", "?y. P y", {"P"}), LambdaMode::kLifting);
  EXPECT_EQ(closed.clauses[0], C("P(sk%1)"));
  EXPECT_TRUE(closed.skolems[0].deps.empty());
}

TEST(ClausifyTest, NegationNormalFormAndIff) {
  ClausifiedFact cf = clausify(fact("F", "~(P <-> Q)", {"P", "Q"}), LambdaMode::kLifting);
  EXPECT_EQ(cf.clauses.size(), 2u);
  std::set<Clause> got(cf.clauses.begin(), cf.clauses.end());
  EXPECT_EQ(got, (std::set<Clause>{C("P | Q"), C("~P | ~Q")}));
}

TEST(ClausifyTest, BoundVariablesAreRenamedApart) {
  ClausifiedFact cf =
      clausify(fact("F", "(!x. P x) | (!x. Q x y)", {"P", "Q"}), LambdaMode::kLifting);
  ASSERT_EQ(cf.clauses.size(), 1u);
  EXPECT_EQ(cf.clauses[0].variables().size(), 3u);
  EXPECT_EQ(cf.var_maps[0], (VarMap{{"y", "y"}}));
}

TEST(ClausifyTest, DefinitionalCnfAboveGuard) {
  std::string text;
  for (int i = 0; i < 7; ++i) {
    if (i) text += " | ";
    text += "(A" + std::to_string(i) + " & B" + std::to_string(i) + ")";
  }
  ClausifiedFact cf = clausify(fact("Big", text.c_str(), {}), LambdaMode::kLifting);
  EXPECT_EQ(cf.definitional.size(), 7u);
  EXPECT_EQ(cf.clauses.size(), 1u + 14u);
  EXPECT_EQ(cf.clauses[0].size(), 7u);
}

TEST(ClausifyTest, DistributionAtGuard) {
  std::string text;
  for (int i = 0; i < 6; ++i) {
    if (i) text += " | ";
    text += "(A" + std::to_string(i) + " & B" + std::to_string(i) + ")";
  }
  ClausifiedFact cf = clausify(fact("Ok", text.c_str(), {}), LambdaMode::kLifting);
  EXPECT_TRUE(cf.definitional.empty());
  EXPECT_EQ(cf.clauses.size(), 64u);
}

TEST(EncodingTest, MinimalArityAndApp) {
  Problem p = parse_problem("fact F: P (map f) & P (map f xs)\ngoal: Q");
  EncodedProblem e = encode_problem(p, LambdaMode::kLifting);
  ASSERT_EQ(e.facts[0].clauses.size(), 2u);
  EXPECT_EQ(e.facts[0].clauses[0], C("P(app(?map, ?f))"));
  Problem q = parse_problem("const map\nfact F: P (map f) & P (map f xs)\ngoal: Q");
  EncodedProblem eq = encode_problem(q, LambdaMode::kLifting);
  EXPECT_EQ(eq.facts[0].clauses[0], C("P(map(?f))"));
  EXPECT_EQ(eq.facts[0].clauses[1], C("P(app(map(?f), ?xs))"));
}

TEST(EncodingTest, PredicatesUsedAsTermsGoThroughBool) {
  Problem p = parse_problem("const R\nfact F: R a & S R\ngoal: Q");
  EncodedProblem e = encode_problem(p, LambdaMode::kLifting);
  EXPECT_EQ(e.facts[0].clauses[0], C("bool%(app(R, ?a))"));
  EXPECT_EQ(e.facts[0].clauses[1], C("S(R)"));
}

TEST(EncodingTest, ProblemTables) {
  EncodedProblem e =
      encode_problem(testing::load_problem("surj_compose.prob"), LambdaMode::kLifting);
  ASSERT_EQ(e.definitions.size(), 1u);
  EXPECT_EQ(e.definitions[0].name, "ll%1");
  EXPECT_EQ(e.definitions[0].clause, C("app(ll%1, ?a) = g(Suc(?a))"));
  EXPECT_EQ(e.goal.clauses.size(), 3u);
  EXPECT_EQ(e.table.at(e.goal.clauses[0]).kind, SourceKind::kGoal);
  EXPECT_EQ(e.table.at(ext_clause()).kind, SourceKind::kExt);
  EXPECT_EQ(e.table.at(e.definitions[0].clause).kind, SourceKind::kDefinition);
  EXPECT_TRUE(e.info.lambda_defs.contains("ll%1"));
  EXPECT_TRUE(e.info.skolems.contains("sk%1"));
  EXPECT_TRUE(e.info.constants.contains("g"));
  auto inputs = e.inputs();
  EXPECT_EQ(inputs.front().kind, SourceKind::kFact);
  EXPECT_EQ(inputs.back().kind, SourceKind::kGoal);
}

TEST(EncodingTest, LiftingSharesAlphaEquivalentLambdas) {
  EncodedProblem e =
      encode_problem(testing::load_problem("surj_swap.prob"), LambdaMode::kLifting);
  EXPECT_EQ(e.definitions.size(), 1u);
}

TEST(LambdaLiftTest, SwappedArguments) {
  LambdaEncoding enc = lambda_lift(parse_surface_term("\\x. \\y. g y x", {"g"}));
  EXPECT_EQ(enc.term, parse_marked_term("ll%1"));
  ASSERT_EQ(enc.definitions.size(), 1u);
  EXPECT_EQ(enc.definitions[0], C("app(app(ll%1, ?a), ?b) = g(?b, ?a)"));
}

TEST(LambdaLiftTest, LambdaFreeTermIsUnchanged) {
  LambdaEncoding enc = lambda_lift(parse_surface_term("g (Suc x) y", {"g", "Suc"}));
  EXPECT_EQ(enc.term, parse_marked_term("g(Suc(?x), ?y)"));
  EXPECT_TRUE(enc.definitions.empty());
}

TEST(LambdaLiftTest, FreeConstantStaysInBody) {
  LambdaEncoding enc = lambda_lift(parse_surface_term("\\b. g b sk", {"g", "sk"}));
  ASSERT_EQ(enc.definitions.size(), 1u);
  EXPECT_EQ(enc.definitions[0], C("app(ll%1, ?a) = g(?a, sk)"));
}

TEST(LambdaLiftTest, CapturedVariablesBecomeArguments) {
  LambdaEncoding enc = lambda_lift(parse_surface_term("\\b. g b v", {"g"}));
  EXPECT_EQ(enc.term, parse_marked_term("app(ll%1, ?v)"));
  EXPECT_EQ(enc.definitions[0], C("app(app(ll%1, ?a), ?b) = g(?b, ?a)"));
}

TEST(CombinatorTest, BracketAbstraction) {
  EXPECT_EQ(combinator_encode(parse_surface_term("\\x. 0", {})).term,
            parse_marked_term("app(comb%K, 0)"));
  EXPECT_EQ(combinator_encode(parse_surface_term("\\x. x", {})).term,
            parse_marked_term("comb%I"));
  LambdaEncoding b = combinator_encode(parse_surface_term("\\x. f (g x)", {"f", "g"}));
  EXPECT_EQ(b.term, parse_marked_term("app(app(comb%B, f), g)"));
  ASSERT_EQ(b.definitions.size(), 1u);
  EXPECT_EQ(b.definitions[0], C("app(app(app(comb%B, ?a), ?b), ?c) = app(?a, app(?b, ?c))"));
  EXPECT_EQ(combinator_encode(parse_surface_term("\\x. g x", {"g"})).term,
            parse_marked_term("g"));
  EXPECT_EQ(combinator_encode(parse_surface_term("\\x. g x c", {"g", "c"})).term,
            parse_marked_term("app(app(comb%C, g), c)"));
  EXPECT_EQ(combinator_encode(parse_surface_term("\\x. g x x", {"g"})).term,
            parse_marked_term("app(app(comb%S, g), comb%I)"));
}

TEST(CombinatorTest, Definitions) {
  const auto& defs = combinator_definitions();
  EXPECT_EQ(defs.size(), 5u);
  EXPECT_TRUE(alpha_equal(defs.at("comb%S"), parse_surface_term("\\x y z. x z (y z)", {})));
  EXPECT_TRUE(alpha_equal(defs.at("comb%K"), parse_surface_term("\\x y. x", {})));
}

}  // namespace
}  // namespace parakeet
