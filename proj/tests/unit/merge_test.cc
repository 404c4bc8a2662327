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

#include "parakeet/merge.h"
#include "parakeet/parser.h"

namespace parakeet {
namespace {

SurfaceTerm S(const char* text) { return parse_surface_term(text, {"f", "g", "a", "b", "2"}); }
SurfaceTerm W(int k) { return SurfaceTerm::var("_w%" + std::to_string(k)); }

TEST(MergeTest, WildcardRenaming) {
  std::map<std::string, std::string> r;
  EXPECT_TRUE(equal_up_to_wildcards(SurfaceTerm::app(S("f"), W(1)),
                                    SurfaceTerm::app(S("f"), W(7)), r));
  EXPECT_EQ(r.at("_w%7"), "_w%1");
  EXPECT_FALSE(equal_up_to_wildcards(SurfaceTerm::app(S("f"), W(1)),
                                     SurfaceTerm::app(S("f"), W(8)), r));
  std::map<std::string, std::string> fresh;
  EXPECT_FALSE(equal_up_to_wildcards(SurfaceTerm::app(S("f"), W(1)), S("f a"), fresh));
  EXPECT_TRUE(equal_up_to_wildcards(S("\\x. g x"), S("\\y. g y"), fresh));
}

TEST(MergeTest, DisjointBindingsMerge) {
  Instantiation a{"F", {{"n", S("2")}, {"x", S("a")}}};
  Instantiation b{"F", {{"n", S("2")}, {"y", S("b")}}};
  auto m = merge(a, b);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(to_string(*m), "F with {n -> 2, x -> a, y -> b}");
}

TEST(MergeTest, ConflictDoesNotMerge) {
  Instantiation a{"F", {{"n", S("a")}}};
  Instantiation b{"F", {{"n", S("b")}}};
  EXPECT_FALSE(merge(a, b).has_value());
  EXPECT_FALSE(merge(a, Instantiation{"G", {{"n", S("a")}}}).has_value());
}

TEST(MergeTest, MergeAllGreedy) {
  std::vector<Instantiation> in = {
      {"F", {{"n", S("a")}}},
      {"F", {{"n", S("b")}}},
      {"F", {{"n", S("a")}, {"x", S("a")}}},
      {"F", {{"n", S("a")}}},
      {"G", {}},
  };
  std::vector<Instantiation> out = merge_all(in);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(to_string(out[0]), "F with {n -> a, x -> a}");
  EXPECT_EQ(to_string(out[1]), "F with {n -> b}");
  EXPECT_EQ(to_string(out[2]), "G with {}");
}

TEST(MergeTest, WildcardsInMergedGroupAgree) {
  std::vector<Instantiation> in = {
      {"F", {{"n", SurfaceTerm::app(S("f"), W(1))}}},
      {"F", {{"n", SurfaceTerm::app(S("f"), W(2))}, {"m", W(2)}}},
  };
  std::vector<Instantiation> out = merge_all(in);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(*out[0].find("m"), W(1));
}

}  // namespace
}  // namespace parakeet
