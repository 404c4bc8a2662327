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

#include "parakeet/decoder.h"
#include "parakeet/parser.h"
#include "parakeet/proof_io.h"

namespace parakeet {
namespace {

SurfaceTerm S(const char* text, std::set<std::string> constants = {}) {
  return parse_surface_term(text, constants);
}

class DecoderTest : public ::testing::Test {
 protected:
  void SetUp() override {
    info_.constants = {"map", "f", "xs", "g", "Suc", "0", "1", "P"};
    info_.skolems = {"sk%1"};
    info_.lambda_defs = combinator_definitions();
    info_.lambda_defs.emplace("ll%1", S("\\a. g (Suc a)", {"g", "Suc"}));
    ctx_.info = &info_;
  }
  std::string decode(const char* marked) {
    DecodeContext ctx = ctx_;
    SurfaceTerm t = expand_combinators(decode_term(parse_marked_term(marked), ctx), ctx);
    return to_string(eliminate_skolems(t, ctx));
  }

  DecodeInfo info_;
  DecodeContext ctx_;
};

TEST_F(DecoderTest, AppSpines) {
  EXPECT_EQ(to_string(decode_term(parse_marked_term("app(app(map, f), xs)"), ctx_)),
            "map f xs");
  EXPECT_EQ(to_string(decode_term(parse_marked_term("app(map(f), ?x)"), ctx_)), "map f x");
  EXPECT_EQ(to_string(decode_term(parse_marked_term("bool%(app(P, 0))"), ctx_)), "P 0");
}

TEST_F(DecoderTest, UnknownSymbol) {
  EXPECT_THROW(decode_term(parse_marked_term("h(0)"), ctx_), DecodeError);
}

TEST_F(DecoderTest, Combinators) {
  EXPECT_EQ(decode("app(app(comb%K, 0), 1)"), "0");
  EXPECT_EQ(decode("app(comb%I, f)"), "f");
  EXPECT_EQ(decode("app(app(comb%B, Suc), g)"), "\\a. Suc (g a)");
  EXPECT_EQ(decode("app(comb%K, 0)"), "\\a. 0");
}

TEST_F(DecoderTest, Supercombinators) {
  EXPECT_EQ(decode("ll%1"), "\\a. g (Suc a)");
  EXPECT_EQ(decode("app(ll%1, 0)"), "g (Suc 0)");
}

TEST_F(DecoderTest, SkolemsBecomeSharedWildcards) {
  DecodeContext ctx = ctx_;
  std::map<std::string, SurfaceTerm> shared;
  SurfaceTerm a = eliminate_skolems(decode_term(parse_marked_term("Suc(app(g, sk%1(ll%1)))"), ctx), ctx, shared);
  SurfaceTerm b = eliminate_skolems(decode_term(parse_marked_term("sk%1(ll%1)"), ctx), ctx, shared);
  SurfaceTerm c = eliminate_skolems(decode_term(parse_marked_term("sk%1(0)"), ctx), ctx, shared);
  EXPECT_EQ(to_string(a), "Suc (g _)");
  EXPECT_EQ(a.arg().arg(), b);
  EXPECT_NE(b, c);
}

TEST_F(DecoderTest, SurjectivityWitness) {
  RawInstantiation raw{"surjD",
                       {{"f", parse_marked_term("ll%1")},
                        {"y", parse_marked_term("Suc(app(g, sk%1(ll%1)))")}},
                       {"f", "y"}};
  DecodeContext ctx = ctx_;
  DecodedInstantiation d = decode_instantiation(raw, {"f", "y"}, ctx);
  EXPECT_TRUE(d.errors.empty());
  PrintStyle style;
  EXPECT_EQ(to_string(d.inst, style), "surjD with {f -> \\a. g (Suc a), y -> Suc (g _)}");
}

TEST_F(DecoderTest, FinalizeUndefined) {
  DecodeContext ctx = ctx_;
  Instantiation on = finalize("F", {{"n", S("Suc x", {"Suc"})}}, {"x", "n"}, {"x", "n"}, ctx);
  EXPECT_EQ(to_string(on), "F with {x -> undefined, n -> Suc undefined}");

  ctx.undefined = false;
  Instantiation off = finalize("F", {{"n", S("Suc x", {"Suc"})}}, {"x", "n"}, {"x", "n"}, ctx);
  EXPECT_EQ(to_string(off), "F with {x -> _, n -> Suc _}");
  EXPECT_NE(*off.find("x"), off.find("n")->arg());
}

TEST_F(DecoderTest, FinalizeOrder) {
  DecodeContext ctx = ctx_;
  Instantiation inst =
      finalize("F", {{"y", S("0")}, {"n", S("1")}, {"zz", S("0")}}, {}, {"n", "x", "y"}, ctx);
  std::vector<std::string> vars;
  for (const auto& [v, t] : inst.bindings) vars.push_back(v);
  EXPECT_EQ(vars, (std::vector<std::string>{"n", "y", "zz"}));
}

TEST_F(DecoderTest, FailedBindingBecomesWildcard) {
  RawInstantiation raw{"F", {{"m", parse_marked_term("h(0)")}, {"n", parse_marked_term("0")}},
                       {"m", "n"}};
  DecodeContext ctx = ctx_;
  DecodedInstantiation d = decode_instantiation(raw, {"m", "n"}, ctx);
  ASSERT_EQ(d.errors.size(), 1u);
  EXPECT_EQ(to_string(d.inst), "F with {m -> _, n -> 0}");
}

TEST(InstantiationPrintTest, ParenStyle) {
  PrintStyle style;
  style.paren_symbols = {{"Suc", 1}};
  Instantiation inst{"F1", {{"m", S("0")}, {"n", S("Suc x", {"Suc"})}}};
  EXPECT_EQ(to_string(inst, style), "F1 with {m -> 0, n -> Suc(x)}");
  EXPECT_EQ(to_string(Instantiation{"F2", {}}, style), "F2 with {}");
}

}  // namespace
}  // namespace parakeet
