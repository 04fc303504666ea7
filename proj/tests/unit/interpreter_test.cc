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

#include "taxsem/interpreter.h"

#include <random>

#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "taxsem/convert.h"
#include "taxsem/similarity.h"
#include "taxsem/util.h"

namespace taxsem {
namespace {

using testing::Dict;

const Interpreter &Interp() {
  static const Interpreter *interp = new Interpreter(Dict());
  return *interp;
}

// Copy of `code` with labels past a random cut replaced by random labels.
TaxCode Perturb(const TaxCode &code, std::mt19937_64 &rng) {
  TaxCode out = code;
  size_t cut = rng() % (code.labels.size() + 1);
  size_t len = cut + rng() % (code.width - cut + 1);
  if (len == 0) len = 1;
  out.labels.resize(std::max(cut, len));
  for (size_t i = cut; i < out.labels.size(); ++i) {
    out.labels[i] = LabelAlphabet::At(1 + rng() % (LabelAlphabet::Size() - 1));
  }
  return out;
}

// Best Wu-Palmer score against every dictionary code of the same prefix
// and width, computed from the public similarity function.
double BestScore(const TaxCode &code) {
  double best = 0;
  for (const DictEntry &e : Dict().entries()) {
    std::optional<TaxCode> c = Dict().TaxCodeOf(e);
    if (!c || c->prefix != code.prefix || c->width != code.width) continue;
    best = std::max(best, WpsLabels(code.Normalized(), c->Normalized()));
  }
  return best;
}

TEST(InterpreterTest, DictionaryHitsHaveSimilarityOne) {
  std::mt19937_64 rng(11);
  const auto &entries = Dict().entries();
  for (int i = 0; i < 200; ++i) {
    const DictEntry &e = entries[rng() % entries.size()];
    TraceRecord r = Interp().InterpretToken(e.code, Format::kTax);
    ASSERT_EQ(r.decision, Decision::kExactDictionary) << e.code;
    ASSERT_EQ(r.similarity, 1.0);
    ASSERT_EQ(r.output, e.name);
    char wid[16];
    snprintf(wid, sizeof(wid), "%09u", e.wid);
    TraceRecord w = Interp().InterpretToken(
        e.kind == EntryKind::kSynset || e.kind == EntryKind::kRole
            ? std::string(wid)
            : e.code,
        Format::kWid);
    ASSERT_EQ(w.decision, Decision::kExactDictionary);
    ASSERT_EQ(w.output, e.name);
  }
}

TEST(InterpreterTest, LiteralsPassThrough) {
  for (const char *token : {"\"John\"", "now", "n12", "+1", "x"}) {
    TraceRecord r = Interp().InterpretToken(token, Format::kTax);
    EXPECT_EQ(r.decision, Decision::kLiteralPassthrough) << token;
    EXPECT_EQ(r.output, token);
    EXPECT_FALSE(r.similarity.has_value());
  }
}

TEST(InterpreterTest, IndexAgreesWithScan) {
  std::mt19937_64 rng(12);
  const auto &entries = Dict().entries();
  int checked = 0;
  while (checked < 300) {
    const DictEntry &e = entries[rng() % entries.size()];
    std::optional<TaxCode> code = Dict().TaxCodeOf(e);
    if (!code) continue;
    TaxCode q = Perturb(*code, rng);
    Nearest fast = Interp().NearestByWps(q);
    Nearest scan = Interp().NearestByScan(q);
    ASSERT_NE(fast.entry, nullptr);
    ASSERT_EQ(fast.entry, scan.entry) << q.ToString();
    ASSERT_NEAR(fast.similarity, scan.similarity, 1e-12);
    checked++;
  }
}

TEST(InterpreterTest, NearestIsAnArgmax) {
  std::mt19937_64 rng(13);
  const auto &entries = Dict().entries();
  int checked = 0;
  while (checked < 25) {
    const DictEntry &e = entries[rng() % entries.size()];
    std::optional<TaxCode> code = Dict().TaxCodeOf(e);
    if (!code || e.kind != EntryKind::kSynset) continue;
    TaxCode q = Perturb(*code, rng);
    Nearest fast = Interp().NearestByWps(q);
    ASSERT_NEAR(fast.similarity, BestScore(q), 1e-12) << q.ToString();
    checked++;
  }
}

TEST(InterpreterTest, NearestByWidStaysInClass) {
  const DictEntry *e = Interp().NearestByWid(100000001);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->wid / 100000000, 1u);
  // Exact WIDs map to themselves.
  const DictEntry *male = Dict().FindByLps("male.n.02");
  EXPECT_EQ(Interp().NearestByWid(male->wid), male);
}

TEST(InterpreterTest, JohnLaughsTaxToLps) {
  std::string tax =
      ReadFile(testing::SourcePath("data/examples/john_laughs.tax"));
  std::string lps =
      ReadFile(testing::SourcePath("data/examples/john_laughs.lps"));
  ParseOptions options = OptionsFor(Format::kTax, Dict());
  SequenceMR mr = ParseSequence(tax, options);
  std::vector<TraceRecord> trace;
  SequenceMR out = Interp().InterpretSequence(mr, Format::kTax, &trace);
  EXPECT_EQ(out, ParseSequence(lps, OptionsFor(Format::kLps, Dict())));
  size_t tokens = 0;
  for (const Line &line : mr.lines) {
    tokens += 1;
    for (const Edge &edge : line.edges) tokens += edge.label.empty() ? 1 : 2;
  }
  EXPECT_EQ(trace.size(), tokens);
  for (const TraceRecord &r : trace) {
    EXPECT_NE(r.decision, Decision::kNearestByWps);
  }
  EXPECT_NE(TraceTsv(trace).find("exact_dictionary"), std::string::npos);
}

TEST(InterpreterTest, UnknownCodeGetsNearest) {
  TaxCode male = testing::CodeOf("male.n.02");
  TaxCode q = male;
  q.labels.push_back(LabelAlphabet::At(LabelAlphabet::Size() - 1));
  ASSERT_EQ(Dict().FindByCode(q.ToString()), nullptr);
  TraceRecord r = Interp().InterpretToken(q.ToString(), Format::kTax);
  EXPECT_EQ(r.decision, Decision::kNearestByWps);
  ASSERT_TRUE(r.similarity.has_value());
  EXPECT_GT(*r.similarity, 0.5);
  EXPECT_LT(*r.similarity, 1.0);
}

}  // namespace
}  // namespace taxsem
