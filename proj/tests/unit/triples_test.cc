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

#include "taxsem/triples.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "taxsem/util.h"

namespace taxsem {
namespace {

ParseOptions Lps() {
  ParseOptions o;
  o.format = Format::kLps;
  return o;
}

TripleGraph Resolve(const std::string &text, ValidationReport *report) {
  return ResolveIndices(ParseSequence(text, Lps()), report);
}

TEST(TriplesTest, JohnLaughsGraphCrossesTheNegationLine) {
  ValidationReport report;
  TripleGraph g = Resolve(
      ReadFile(testing::SourcePath("data/examples/john_laughs.lps")), &report);
  EXPECT_TRUE(report.well_formed) << report.FaultList();
  ASSERT_EQ(g.concepts.size(), 4u);
  // laugh.v.01 Agent -2 reaches male.n.02, Time -1 reaches time.n.08.
  EXPECT_NE(std::find(g.edges.begin(), g.edges.end(),
                      EdgeTriple{3, "Agent", 0, ""}),
            g.edges.end());
  EXPECT_NE(std::find(g.edges.begin(), g.edges.end(),
                      EdgeTriple{3, "Time", 1, ""}),
            g.edges.end());
  EXPECT_NE(std::find(g.edges.begin(), g.edges.end(),
                      EdgeTriple{2, kScopeLabel, 3, ""}),
            g.edges.end());
  EXPECT_NE(std::find(g.edges.begin(), g.edges.end(),
                      EdgeTriple{0, "Name", -1, "\"John\""}),
            g.edges.end());
  EXPECT_EQ(g.TripleCount(), 4u + 5u);
}

TEST(TriplesTest, BirdwatcherLabels) {
  ValidationReport report;
  TripleGraph g = Resolve(
      ReadFile(testing::SourcePath("data/examples/birdwatcher.lps")), &report);
  EXPECT_EQ(g.concepts.size(), 7u);
  std::multiset<std::string> labels;
  for (const EdgeTriple &e : g.edges) labels.insert(e.label);
  std::multiset<std::string> expected = {
      "Name", "AttributeOf", "EQU", "Role", "Experiencer", "Topic",
      "Experiencer", "Stimulus"};
  EXPECT_EQ(labels, expected);
}

TEST(TriplesTest, SingleConcept) {
  ValidationReport report;
  TripleGraph g = Resolve("hobby.n.03", &report);
  EXPECT_TRUE(report.well_formed);
  EXPECT_EQ(g.concepts.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
}

TEST(TriplesTest, DanglingIndex) {
  ValidationReport report = Validate(ParseSequence("see.v.01 Stimulus +1", Lps()));
  EXPECT_FALSE(report.well_formed);
  ASSERT_EQ(report.faults.size(), 1u);
  EXPECT_EQ(report.faults[0].kind, FaultKind::kDanglingIndex);
  report = Validate(ParseSequence("male.n.02\nsee.v.01 Agent -5", Lps()));
  EXPECT_EQ(report.faults[0].kind, FaultKind::kDanglingIndex);
  EXPECT_EQ(report.faults[0].line, 2);
}

TEST(TriplesTest, MinimalCycle) {
  ValidationReport report = Validate(
      ParseSequence("person.n.01 Role +1\nperson.n.01 Role -1", Lps()));
  EXPECT_FALSE(report.well_formed);
  EXPECT_EQ(report.faults[0].kind, FaultKind::kCyclicGraph);
}

TEST(TriplesTest, ScopesCountConceptLinesOnly) {
  ValidationReport report;
  TripleGraph g = Resolve(
      "a.n.01\nNEGATION <2\nb.n.01\nCONTINUATION >1 <1\nc.n.01", &report);
  EXPECT_TRUE(report.well_formed) << report.FaultList();
  std::set<std::pair<int, int>> scope;
  for (const EdgeTriple &e : g.edges) scope.insert({e.source, e.target});
  std::set<std::pair<int, int>> expected = {{1, 2}, {1, 4}, {3, 2}, {3, 4}};
  EXPECT_EQ(scope, expected);
}

TEST(TriplesTest, TopEdgesAreDropped) {
  ValidationReport report;
  TripleGraph g = Resolve("a.n.01 TOP now", &report);
  EXPECT_TRUE(g.edges.empty());
}

TEST(TriplesTest, ValidateBlockReportsUnknownTokens) {
  ValidationReport report =
      ValidateBlock("beelte.n.02 Name \"x\"", Lps(), &testing::Dict());
  EXPECT_FALSE(report.well_formed);
  EXPECT_EQ(report.faults[0].kind, FaultKind::kUnknownToken);
  EXPECT_TRUE(ValidateBlock("hobby.n.03", Lps(), &testing::Dict()).well_formed);
  EXPECT_EQ(ValidateBlock("hobby", Lps()).faults[0].kind,
            FaultKind::kMalformedLine);
}

TEST(TriplesTest, IllFormedRate) {
  std::vector<ValidationReport> reports(4);
  reports[1].Add({FaultKind::kCyclicGraph, 0, ""});
  EXPECT_DOUBLE_EQ(IllFormedRate(reports), 0.25);
  EXPECT_DOUBLE_EQ(IllFormedRate({}), 0.0);
  EXPECT_EQ(reports[0].FaultList(), "-");
}

}  // namespace
}  // namespace taxsem
