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

// Concept identification scoring and sense-number statistics.

#ifndef TAXSEM_EVALUATION_H_
#define TAXSEM_EVALUATION_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxsem/dictionary.h"
#include "taxsem/sequence.h"
#include "taxsem/similarity.h"
#include "taxsem/triples.h"

namespace taxsem {

// Adjectives and adverbs are pooled.
enum class Category { kNoun, kVerb, kAdjAdv };

const char *CategoryName(Category category);
std::optional<Category> CategoryFromName(std::string_view name);
// Category of an LPS key by its POS letter.
std::optional<Category> CategoryOf(std::string_view lps);

struct ConceptPair {
  std::string gold;
  // Empty when the system produced nothing for the gold concept.
  std::string predicted;
  Category category = Category::kNoun;
  // Optional annotations carried into reports.
  std::string system;
  std::string sentence;
  std::optional<double> reference;
};

struct PairScore {
  ConceptPair pair;
  double score = 0;
  // Empty unless a key failed to resolve.
  std::string warning;
};

struct CategorySummary {
  std::string system;
  Category category = Category::kNoun;
  int items = 0;
  double mean = 0;
};

struct ChallengeReport {
  std::vector<PairScore> scores;
  // Ordered by system, then category.
  std::vector<CategorySummary> summary;

  // Per-pair TSV with a header line.
  std::string PairsTsv() const;
  // Per-category means to three decimals, with a header line.
  std::string SummaryTsv() const;
};

// Reads pair rows from a TSV with a header naming at least the gold and
// predicted columns; category, system, sentence and reference are optional.
// An empty or "-" prediction means no prediction.
std::vector<ConceptPair> ParsePairs(std::string_view tsv);

// Wu-Palmer over the dictionary codes of each pair. Empty predictions and
// keys absent from the dictionary score 0; the latter get a warning.
ChallengeReport ScorePairs(
    const std::vector<ConceptPair> &pairs, const ConceptDictionary &dict,
    DepthConvention convention = DepthConvention::kWithPrefix);

// Predicted concept aligned to the gold node labeled `target` under
// `mapping` (predicted node to gold node). Throws a data error when no gold
// node carries `target`.
ConceptPair AlignConcepts(const TripleGraph &gold, const TripleGraph &pred,
                          const std::vector<int> &mapping,
                          std::string_view target);

struct ReviewOverride {
  int block = 0;
  std::string gold;
  std::string predicted;
};

// Rows of block index, gold key, corrected prediction. Header optional.
std::vector<ReviewOverride> ParseReview(std::string_view tsv);

// Replaces predictions of pairs[block - 1] whose gold key matches.
void ApplyReview(const std::vector<ReviewOverride> &review,
                 std::vector<ConceptPair> *pairs);

struct SenseHistogram {
  std::map<int, int> counts;
  int blocks = 0;
  int skipped_blocks = 0;

  std::string Tsv() const;
  std::string Csv() const;
};

// Counts sense numbers of concept heads over LPS blocks. Blocks that fail to
// parse are skipped and counted.
SenseHistogram SenseDistribution(const std::vector<std::string> &blocks);

}  // namespace taxsem

#endif  // TAXSEM_EVALUATION_H_
