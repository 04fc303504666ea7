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

#include "taxsem/dictionary.h"

#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "taxsem/symbols.h"
#include "taxsem/util.h"

namespace taxsem {
namespace {

using testing::Dict;

TEST(DictionaryTest, CoversSynsetsAndSymbolTables) {
  size_t expected = 117659 + Roles().size() + Operators().size() +
                    DiscourseRelations().size();
  EXPECT_EQ(Dict().entries().size(), expected);
  EXPECT_EQ(Dict().role_width(), kRoleWidth);
}

TEST(DictionaryTest, PublishedTokens) {
  const DictEntry *male = Dict().FindByLps("male.n.02");
  ASSERT_NE(male, nullptr);
  EXPECT_EQ(male->wid, 109624168u);
  EXPECT_EQ(Dict().FindByLps("male_person.n.01"), male);
  EXPECT_EQ(Dict().FindByLps("time.n.08")->wid, 115135822u);
  EXPECT_EQ(Dict().FindByLps("time.n.08")->name, "time.n.08");
  EXPECT_EQ(Dict().FindByLps("Name")->code, "t12000");
  EXPECT_EQ(Dict().FindByLps("Agent")->code, "t22100");
  EXPECT_EQ(Dict().FindByLps("Time")->code, "t21000");
  EXPECT_EQ(Dict().FindByLps("Name")->wid, 500000018u);
  EXPECT_EQ(Dict().FindByLps("Agent")->wid, 500000004u);
  EXPECT_EQ(Dict().FindByLps("Time")->wid, 500000003u);
  EXPECT_EQ(Dict().FindByLps("NEGATION")->code, "¬");
  EXPECT_EQ(Dict().FindByLps("EQU")->code, "=");
}

TEST(DictionaryTest, SynonymsShareOneEntry) {
  const DictEntry *beverage = Dict().FindByLps("beverage.n.01");
  ASSERT_NE(beverage, nullptr);
  EXPECT_EQ(Dict().FindByLps("drink.n.03"), beverage);
  EXPECT_EQ(Dict().FindByCode(beverage->code), beverage);
  EXPECT_EQ(Dict().FindByWid(beverage->wid), beverage);
}

TEST(DictionaryTest, SerializeParseRoundTrip) {
  std::string text = Dict().Serialize();
  EXPECT_EQ(text.rfind("#taxsem-dictionary\twordnet=3.0\t", 0), 0u);
  ConceptDictionary parsed = ConceptDictionary::Parse(text);
  EXPECT_TRUE(parsed == Dict());
  EXPECT_EQ(parsed.Serialize(), text);
}

TEST(DictionaryTest, SaveLoadRoundTrip) {
  std::string path = testing::ScratchDir("dict") + "/d.tsv";
  Dict().Save(path);
  EXPECT_TRUE(ConceptDictionary::Load(path) == Dict());
}

TEST(DictionaryTest, RejectsDuplicatesAndBadInput) {
  ConceptDictionary d;
  d.set_width(3);
  d.Add({EntryKind::kSynset, 100000001, "a.n.01", "n100", {"a.n.01"}});
  EXPECT_THROW(d.Add({EntryKind::kSynset, 100000002, "b.n.01", "n100",
                      {"b.n.01"}}),
               Error);
  EXPECT_THROW(ConceptDictionary::Parse("garbage\n"), Error);
}

TEST(DictionaryTest, CanonicalMemberPrefersTaggedLemma) {
  const WordNetStore &store = testing::Store();
  const Synset &time = store.Get(store.Resolve("time.n.08"));
  EXPECT_EQ(store.MemberLps(time, CanonicalMember(time)), "time.n.08");
}

}  // namespace
}  // namespace taxsem
