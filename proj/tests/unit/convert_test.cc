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

#include "taxsem/convert.h"

#include <random>

#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "taxsem/triples.h"
#include "taxsem/util.h"

namespace taxsem {
namespace {

using testing::Dict;

std::string Example(const std::string &name) {
  return std::string(Trim(ReadFile(testing::SourcePath("data/examples/" + name))));
}

SequenceMR Parse(const std::string &text, Format format) {
  return ParseSequence(text, OptionsFor(format, Dict()));
}

TEST(ConvertTest, JohnLaughsLpsToWidAsPrinted) {
  SequenceMR lps = Parse(Example("john_laughs.lps"), Format::kLps);
  EXPECT_EQ(Convert(lps, Format::kLps, Format::kWid, Dict()).Serialize(),
            Example("john_laughs.wid"));
  SequenceMR wid = Parse(Example("john_laughs.wid"), Format::kWid);
  EXPECT_EQ(Convert(wid, Format::kWid, Format::kLps, Dict()).Serialize(),
            Example("john_laughs.lps"));
}

TEST(ConvertTest, JohnLaughsTaxKeepsRolesSymbolsAndArguments) {
  SequenceMR wid = Parse(Example("john_laughs.wid"), Format::kWid);
  SequenceMR tax = Convert(wid, Format::kWid, Format::kTax, Dict());
  EXPECT_EQ(tax.Serialize(), Example("john_laughs.tax"));
  std::string serialized = tax.Serialize();
  for (char &c : serialized) {
    if (c == '\n') c = ' ';
  }
  std::vector<std::string> ours = TokenizeLine(serialized);
  std::string published = Example("john_laughs_published.tax");
  for (char &c : published) {
    if (c == '\n') c = ' ';
  }
  std::vector<std::string> printed = TokenizeLine(published);
  ASSERT_EQ(ours.size(), printed.size());
  for (size_t i = 0; i < ours.size(); ++i) {
    bool is_concept = printed[i].size() > 20;
    if (is_concept) {
      EXPECT_EQ(ours[i][0], printed[i][0]);  // same POS prefix
    } else {
      EXPECT_EQ(ours[i], printed[i]);
    }
  }
  EXPECT_EQ(Convert(tax, Format::kTax, Format::kLps, Dict()).Serialize(),
            Example("john_laughs.lps"));
}

TEST(ConvertTest, IdentityConversion) {
  SequenceMR lps = Parse(Example("birdwatcher.lps"), Format::kLps);
  EXPECT_EQ(Convert(lps, Format::kLps, Format::kLps, Dict()).Serialize(),
            lps.Serialize());
}

TEST(ConvertTest, UnknownTokenFault) {
  SequenceMR mr = Parse("beelte.n.02 Name \"x\"", Format::kLps);
  try {
    Convert(mr, Format::kLps, Format::kTax, Dict());
    FAIL();
  } catch (const SequenceError &e) {
    EXPECT_EQ(e.fault().kind, FaultKind::kUnknownToken);
    EXPECT_EQ(e.fault().detail, "beelte.n.02");
  }
}

TEST(ConvertTest, RoundTripsOverCanonicalSynsets) {
  std::mt19937_64 rng(7);
  const std::vector<DictEntry> &entries = Dict().entries();
  for (int block = 0; block < 200; ++block) {
    std::string text;
    int lines = 1 + rng() % 6;
    for (int i = 0; i < lines; ++i) {
      const DictEntry *e;
      do {
        e = &entries[rng() % entries.size()];
      } while (e->kind != EntryKind::kSynset);
      text += e->name;
      if (i > 0) text += " Agent -1";
      text += "\n";
    }
    SequenceMR lps = Parse(text, Format::kLps);
    for (Format mid : {Format::kWid, Format::kTax}) {
      SequenceMR there = Convert(lps, Format::kLps, mid, Dict());
      SequenceMR reparsed = Parse(there.Serialize(), mid);
      SequenceMR back = Convert(reparsed, mid, Format::kLps, Dict());
      ASSERT_EQ(back.Serialize(), lps.Serialize());
    }
  }
}

TEST(ConvertTest, TripleCountsAndFaultsAreFormatInvariant) {
  // The figure spells the concept "birdwatcher.n.01"; WordNet 3.0 has
  // "bird_watcher.n.01".
  std::string birdwatcher = Example("birdwatcher.lps");
  birdwatcher.replace(birdwatcher.find("birdwatcher"), 11, "bird_watcher");
  for (std::string text : {Example("john_laughs.lps"), birdwatcher,
                           std::string("male.n.02 Agent +3\nhobby.n.03")}) {
    SequenceMR lps = Parse(text, Format::kLps);
    ValidationReport r0;
    TripleGraph g0 = ResolveIndices(lps, &r0);
    for (Format f : {Format::kWid, Format::kTax}) {
      SequenceMR other = Convert(lps, Format::kLps, f, Dict());
      ValidationReport r1;
      TripleGraph g1 = ResolveIndices(Parse(other.Serialize(), f), &r1);
      EXPECT_EQ(g1.TripleCount(), g0.TripleCount());
      ASSERT_EQ(r1.faults.size(), r0.faults.size());
      for (size_t i = 0; i < r0.faults.size(); ++i) {
        EXPECT_EQ(r1.faults[i].kind, r0.faults[i].kind);
        EXPECT_EQ(r1.faults[i].line, r0.faults[i].line);
      }
    }
  }
}

}  // namespace
}  // namespace taxsem
