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

#include "parakeet/clause.h"
#include "parakeet/kbo.h"
#include "parakeet/proof_io.h"

namespace parakeet {
namespace {

Term T(const char* text) { return parse_marked_term(text); }
Clause C(const char* text) { return parse_marked_clause(text); }

Kbo successor_order() {
  Kbo kbo;
  for (const char* s : {"0", "1", "Suc", "less"}) kbo.register_symbol(s);
  return kbo;
}

TEST(KboTest, WeightDominates) {
  Kbo kbo = successor_order();
  EXPECT_EQ(kbo.compare(T("Suc(0)"), T("1")), Order::kGreater);
  EXPECT_EQ(kbo.compare(T("1"), T("Suc(0)")), Order::kLess);
  EXPECT_EQ(kbo.compare(T("Suc(Suc(?x))"), T("Suc(?x)")), Order::kGreater);
}

TEST(KboTest, PrecedenceBreaksWeightTies) {
  Kbo kbo = successor_order();
  EXPECT_EQ(kbo.compare(T("1"), T("0")), Order::kGreater);
  EXPECT_EQ(kbo.compare(T("Suc(1)"), T("Suc(0)")), Order::kGreater);
}

TEST(KboTest, VariableConditions) {
  Kbo kbo = successor_order();
  EXPECT_EQ(kbo.compare(T("?x"), T("Suc(?x)")), Order::kLess);
  EXPECT_EQ(kbo.compare(T("?x"), T("?y")), Order::kIncomparable);
  EXPECT_EQ(kbo.compare(T("Suc(Suc(?x))"), T("Suc(?y)")), Order::kIncomparable);
  EXPECT_EQ(kbo.compare(T("Suc(?x)"), T("Suc(?x)")), Order::kEqual);
}

TEST(KboTest, IsStableUnderSubstitution) {
  Kbo kbo = successor_order();
  Term s = T("less(Suc(?x), ?y)");
  Term t = T("less(?x, ?y)");
  ASSERT_EQ(kbo.compare(s, t), Order::kGreater);
  Substitution sub{{"x", T("Suc(0)")}, {"y", T("1")}};
  EXPECT_EQ(kbo.compare(sub.apply(s), sub.apply(t)), Order::kGreater);
}

TEST(KboTest, NegativeLiteralBeatsPositiveOnSameAtom) {
  Kbo kbo = successor_order();
  Literal pos = Literal::pos(T("less(0, 1)"));
  EXPECT_EQ(kbo.compare(pos.complement(), pos), Order::kGreater);
}

TEST(KboTest, MaximalLiterals) {
  Kbo kbo = successor_order();
  Clause c = C("~less(?m, ?n) | less(Suc(?m), Suc(?n))");
  std::size_t big = c.literals()[0].positive ? 0 : 1;
  EXPECT_TRUE(kbo.maximal(c, big));
  EXPECT_FALSE(kbo.maximal(c, 1 - big));
}

TEST(ClauseTest, SortedAndDeduplicated) {
  Clause c = C("p(a) | ~q(?x) | p(a)");
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c, C("~q(?x) | p(a)"));
}

TEST(ClauseTest, Tautologies) {
  EXPECT_TRUE(C("p(?x) | ~p(?x)").is_tautology());
  EXPECT_TRUE(C("a = a").is_tautology());
  EXPECT_FALSE(C("a != a").is_tautology());
  EXPECT_FALSE(C("p(?x) | ~p(?y)").is_tautology());
}

TEST(ClauseTest, ApplyMergesLiterals) {
  Clause c = C("p(?x) | p(a)");
  EXPECT_EQ(c.apply(Substitution{{"x", T("a")}}), C("p(a)"));
}

TEST(ClauseTest, Subsumption) {
  EXPECT_TRUE(subsumes(C("p(?x)"), C("p(a) | q(b)")));
  EXPECT_TRUE(subsumes(C("p(?x) | q(?y)"), C("p(a) | q(b)")));
  EXPECT_FALSE(subsumes(C("p(?x) | q(?x)"), C("p(a) | q(b)")));
  EXPECT_FALSE(subsumes(C("p(?x) | p(?y)"), C("p(a)")));
}

TEST(ClauseTest, EqualityLiterals) {
  Literal l = Literal::eq(T("Suc(0)"), T("1"), false);
  EXPECT_TRUE(l.is_equality());
  EXPECT_EQ(to_string(l), "Suc(0) != 1");
  EXPECT_EQ(to_string(Clause{}), "False");
}

}  // namespace
}  // namespace parakeet
