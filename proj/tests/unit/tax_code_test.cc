// Copyright 2026 The Taxsem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "taxsem/tax_code.h"

#include <set>

#include "gtest/gtest.h"
#include "taxsem/util.h"

namespace taxsem {
namespace {

TEST(TaxCodeTest, ParsesPaddedCodes) {
  std::optional<TaxCode> c = TaxCode::Parse("n11421A3000", 10);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->prefix, 'n');
  EXPECT_EQ(EncodeUtf8(c->labels), "11421A3");
  EXPECT_EQ(c->depth(), 7);
  EXPECT_EQ(c->ToString(), "n11421A3000");
}

TEST(TaxCodeTest, PolarityOnlyOnAdjectivesAndAdverbs) {
  std::optional<TaxCode> a = TaxCode::Parse("a122HT31400+", 10);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->polarity, Polarity::kPositive);
  EXPECT_EQ(EncodeUtf8(a->Normalized()), "122HT314+");
  std::optional<TaxCode> neutral = TaxCode::Parse("r12000|", 5);
  ASSERT_TRUE(neutral);
  EXPECT_EQ(EncodeUtf8(neutral->Normalized()), "12");
  EXPECT_FALSE(TaxCode::Parse("n12000+", 5));
}

TEST(TaxCodeTest, RejectsMalformedCodes) {
  EXPECT_FALSE(TaxCode::Parse("x12000", 5));     // prefix
  EXPECT_FALSE(TaxCode::Parse("n1200", 5));      // too short
  EXPECT_FALSE(TaxCode::Parse("n120000", 5));    // too long
  EXPECT_FALSE(TaxCode::Parse("n02000", 5));     // leading pad
  EXPECT_FALSE(TaxCode::Parse("n10200", 5));     // label after pad
  EXPECT_FALSE(TaxCode::Parse("n1\"200", 5));    // reserved character
  EXPECT_FALSE(TaxCode::Parse("", 5));
}

TEST(TaxCodeTest, UnicodeLabelsCountAsOnePosition) {
  std::string token = "n1" + EncodeUtf8(U"Ā") + "000";
  std::optional<TaxCode> c = TaxCode::Parse(token, 5);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->depth(), 2);
  EXPECT_EQ(c->ToString(), token);
}

TEST(TaxCodeTest, AlphabetIsDistinctAndAvoidsReservedCharacters) {
  const std::u32string &labels = LabelAlphabet::Labels();
  std::set<char32_t> seen(labels.begin(), labels.end());
  EXPECT_EQ(seen.size(), labels.size());
  EXPECT_EQ(LabelAlphabet::AsciiSize(), 83u);
  EXPECT_EQ(labels[0], U'1');
  for (char32_t reserved : std::u32string(U"0\"+-|~@/<=> ")) {
    EXPECT_FALSE(LabelAlphabet::Contains(reserved)) << static_cast<int>(reserved);
  }
  EXPECT_GT(LabelAlphabet::Size(), 900u);
}

TEST(TaxCodeTest, PrefixClasses) {
  for (char c : std::string("nvar")) EXPECT_TRUE(IsConceptPrefix(c));
  for (char c : std::string("ti")) EXPECT_TRUE(IsRolePrefix(c));
  EXPECT_FALSE(IsConceptPrefix('t'));
  EXPECT_FALSE(IsRolePrefix('n'));
}

}  // namespace
}  // namespace taxsem
