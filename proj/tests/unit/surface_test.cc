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

#include "parakeet/parser.h"
#include "parakeet/surface.h"

namespace parakeet {
namespace {

SurfaceTerm S(const char* text) { return parse_surface_term(text, {"c", "d", "g", "h", "k"}); }
using ST = SurfaceTerm;

TEST(SurfaceTermTest, SpineAndSize) {
  SurfaceTerm t = S("g (Suc x) y");
  Spine s = spine(t);
  EXPECT_EQ(s.head, ST::constant("g"));
  ASSERT_EQ(s.args.size(), 2u);
  EXPECT_EQ(s.args[1], ST::var("y"));
  EXPECT_EQ(t.size(), 7u);
}

TEST(SurfaceTermTest, FreeVariables) {
  EXPECT_EQ(free_vars(S("\\x. g x y (\\y. y z)")), (std::vector<std::string>{"y", "z"}));
  EXPECT_TRUE(occurs_free("y", S("\\x. x y")));
  EXPECT_FALSE(occurs_free("x", S("\\x. x y")));
}

TEST(SurfaceTermTest, SubstitutionAvoidsCapture) {
  SurfaceTerm t = substitute(S("\\x. g x y"), {{"y", ST::var("x")}});
  ASSERT_TRUE(t.is_lam());
  EXPECT_NE(t.name(), "x");
  EXPECT_TRUE(alpha_equal(t, S("\\z. g z x")));
  EXPECT_EQ(substitute(S("\\y. y"), {{"y", ST::constant("c")}}), S("\\y. y"));
}

TEST(SurfaceTermTest, AlphaEquality) {
  EXPECT_TRUE(alpha_equal(S("\\x y. g y x"), S("\\a b. g b a")));
  EXPECT_FALSE(alpha_equal(S("\\x y. g y x"), S("\\a b. g a b")));
  EXPECT_FALSE(alpha_equal(S("\\x. y"), S("\\x. z")));
  EXPECT_EQ(alpha_key(S("\\x. x")), alpha_key(S("\\q. q")));
}

TEST(SurfaceTermTest, BetaEta) {
  EXPECT_EQ(beta_eta_normalize(S("(\\x y. x) 0 1")), S("0"));
  EXPECT_EQ(beta_eta_normalize(S("\\x. g x")), S("g"));
  EXPECT_EQ(beta_eta_normalize(S("\\x. g x x")), S("\\x. g x x"));
  EXPECT_TRUE(alpha_equal(beta_eta_normalize(S("(\\f x. f (f x)) (\\y. g y)")),
                          S("\\x. g (g x)")));
  EXPECT_FALSE(has_redex(beta_eta_normalize(S("(\\x. \\y. x y) h"))));
  EXPECT_TRUE(has_redex(S("(\\x. x) c")));
}

TEST(SurfaceTermTest, NormalizationBudget) {
  SurfaceTerm omega = S("(\\x. x x) (\\x. x x)");
  EXPECT_THROW(beta_eta_normalize(omega, 100), NormalizationError);
}

TEST(SurfaceTermTest, CanonicalBinders) {
  EXPECT_EQ(canonical_binders(S("\\p q. g q p")), S("\\a b. g b a"));
  // Skips names free in the term.
  EXPECT_EQ(canonical_binders(S("\\p. g p a")), S("\\b. g b a"));
  EXPECT_EQ(canonical_binders(S("\\p. \\q. p")), S("\\a b. a"));
}

TEST(SurfaceTermTest, Printing) {
  PrintStyle style;
  style.paren_symbols = {{"Suc", 1}, {"k", 2}};
  EXPECT_EQ(to_string(S("Suc x"), style), "Suc(x)");
  EXPECT_EQ(to_string(S("k c d"), style), "k(c, d)");
  EXPECT_EQ(to_string(S("k c"), style), "k c");
  EXPECT_EQ(to_string(S("Suc (g x)")), "Suc (g x)");
  EXPECT_EQ(to_string(S("\\c. g (Suc c)")), "\\c. g (Suc c)");
  EXPECT_EQ(to_string(ST::app(ST::constant("Suc"), ST::var("_w%3"))), "Suc _");
  EXPECT_EQ(to_string(S("(\\x. x) c")), "(\\x. x) c");
}

TEST(FormulaTest, FreeVariablesAndSubstitution) {
  Formula f = parse_formula("surj f -> (?x. f x = y)", {"surj"});
  EXPECT_EQ(free_vars(f), (std::vector<std::string>{"f", "y"}));
  Formula g = normalize_terms(
      substitute(f, {{"f", S("\\n. g (Suc n)")}, {"y", S("c")}}));
  EXPECT_EQ(to_string(g), "surj (\\n. g (Suc n)) -> (?x. g (Suc x) = c)");
}

TEST(FormulaTest, SmartConstructors) {
  EXPECT_EQ(Formula::conj({}).kind(), Formula::Kind::kTrue);
  EXPECT_EQ(Formula::disj({}).kind(), Formula::Kind::kFalse);
  Formula p = Formula::atom(S("c"));
  EXPECT_EQ(Formula::conj({p}), p);
}

}  // namespace
}  // namespace parakeet
