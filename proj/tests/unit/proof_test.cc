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

#include "parakeet/proof.h"
#include "parakeet/proof_io.h"
#include "support/generators.h"

namespace parakeet {
namespace {

Term T(const char* text) { return parse_marked_term(text); }
Clause C(const char* text) { return parse_marked_clause(text); }

TEST(KernelTest, Assume) {
  ProofRef n = derive(rules::Assume{T("p(a)")}, {});
  EXPECT_EQ(n->clause(), C("p(a) | ~p(a)"));
}

TEST(KernelTest, Refl) {
  EXPECT_EQ(derive(rules::Refl{T("f(?x)")}, {})->clause(), C("f(?x) = f(?x)"));
}

TEST(KernelTest, SubstMayMergeLiterals) {
  ProofRef a = make_axiom(C("p(?x) | p(a)"));
  ProofRef s = derive(rules::Subst{{{"x", T("a")}}}, {a});
  EXPECT_EQ(s->clause(), C("p(a)"));
}

TEST(KernelTest, EqualityRule) {
  Literal l = Literal::pos(T("less(Suc(0), Suc(?y))"));
  ProofRef n = derive(rules::Equality{l, {0}, T("1")}, {});
  EXPECT_EQ(n->clause(), C("Suc(0) != 1 | ~less(Suc(0), Suc(?y)) | less(1, Suc(?y))"));
}

TEST(KernelTest, EqualityRuleRejectsBadPaths) {
  Literal l = Literal::pos(T("p(a)"));
  try {
    derive(rules::Equality{l, {3}, T("b")}, {});
    FAIL();
  } catch (const DeriveError& e) {
    EXPECT_EQ(e.failure(), DeriveFailure::kInvalidPath);
  }
  EXPECT_THROW(derive(rules::Equality{l, {}, T("b")}, {}), DeriveError);
}

TEST(KernelTest, ResolveEitherOrientation) {
  ProofRef pos = make_axiom(C("p(a) | q(b)"));
  ProofRef neg = make_axiom(C("~p(a) | r(c)"));
  EXPECT_EQ(derive(rules::Resolve{T("p(a)")}, {pos, neg})->clause(), C("q(b) | r(c)"));
  EXPECT_EQ(derive(rules::Resolve{T("p(a)")}, {neg, pos})->clause(), C("q(b) | r(c)"));
}

TEST(KernelTest, ResolveNeedsOppositeSigns) {
  ProofRef a = make_axiom(C("p(a)"));
  try {
    derive(rules::Resolve{T("p(a)")}, {a, a});
    FAIL();
  } catch (const DeriveError& e) {
    EXPECT_EQ(e.failure(), DeriveFailure::kPivotAbsent);
  }
}

TEST(KernelTest, ArityIsChecked) {
  ProofRef a = make_axiom(C("p(a)"));
  EXPECT_THROW(derive(rules::Subst{}, {}), DeriveError);
  EXPECT_THROW(derive(rules::Resolve{T("p(a)")}, {a}), DeriveError);
  EXPECT_THROW(derive(rules::Refl{T("a")}, {a}), DeriveError);
  EXPECT_THROW(derive(rules::Axiom{}, {}), DeriveError);
}

TEST(KernelTest, RuleNames) {
  EXPECT_EQ(rule_name(rules::Axiom{}), "Axiom");
  EXPECT_EQ(rule_name(rules::Resolve{}), "Resolve");
  EXPECT_EQ(rule_arity(rules::Subst{}), 1u);
  EXPECT_EQ(rule_arity(rules::Equality{}), 0u);
}

TEST(CheckerTest, AcceptsHandBuiltWorkedExample) {
  Proof p = testing::hand_built_worked_example();
  EXPECT_TRUE(check_proof(p).ok());
  EXPECT_EQ(count_steps(p), 12u);
  EXPECT_EQ(listing_order(p.root).size(), 12u);
  EXPECT_EQ(count_rule<rules::Subst>(p.root), 3u);
  EXPECT_EQ(axiom_leaves(p.root).size(), 4u);
}

TEST(CheckerTest, RejectsUnregisteredAxiom) {
  Proof p = testing::hand_built_worked_example();
  p.registry = AxiomRegistry{};
  CheckReport r = check_proof(p);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().rule, "Axiom");
}

TEST(CheckerTest, RejectsTamperedClause) {
  ProofRef a = make_axiom(C("p(a)"));
  ProofRef b = make_axiom(C("~p(a)"));
  auto forged = std::make_shared<const ProofNode>(C("q(b)"), rules::Resolve{T("p(a)")},
                                                  std::vector<ProofRef>{a, b});
  Proof p{forged, {}};
  p.registry.add(a->clause(), {});
  p.registry.add(b->clause(), {});
  CheckReport r = check_proof(p);
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].step, 3u);
  EXPECT_NE(r.violations[1].reason.find("root is not the empty clause"), std::string::npos);
}

TEST(CheckerTest, RejectsMissingRoot) { EXPECT_FALSE(check_proof(Proof{}).ok()); }

TEST(StepCountTest, SharedNodesCountPerPath) {
  ProofRef a = make_axiom(C("p(?x)"));
  ProofRef s = derive(rules::Subst{{{"x", T("a")}}}, {a});
  ProofRef t = derive(rules::Subst{{{"x", T("a")}}}, {a});
  ProofRef neg = make_axiom(C("~p(a) | ~p(?x)"));
  ProofRef r1 = derive(rules::Resolve{T("p(a)")}, {s, neg});
  EXPECT_EQ(count_steps(r1), 4u);
  ProofRef shared = derive(rules::Resolve{T("p(a)")}, {s, derive(rules::Subst{{{"x", T("a")}}}, {neg})});
  EXPECT_EQ(count_steps(shared), 5u);
  EXPECT_EQ(listing_order(shared).size(), 5u);
  (void)t;
}

TEST(RegistryTest, FirstSourceWins) {
  AxiomRegistry r;
  r.add(C("p(a)"), {SourceKind::kFact, "A", std::nullopt, {}});
  r.add(C("p(a)"), {SourceKind::kFact, "B", std::nullopt, {}});
  ASSERT_NE(r.find(C("p(a)")), nullptr);
  EXPECT_EQ(r.find(C("p(a)"))->name, "A");
  EXPECT_EQ(r.find(C("q(a)")), nullptr);
  EXPECT_EQ(source_kind_name(SourceKind::kDefinition), "def");
}

}  // namespace
}  // namespace parakeet
