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

// Hard and soft Smatch over triple graphs.
//
// A mapping sends each predicted node to a distinct gold node or to nothing.
// Its weight sums, over matched triple pairs, the similarity of their
// concepts (instance triples) or labels (edge triples). Hard mode uses
// string equality; soft mode uses a graded similarity that is 1 on equal
// tokens. Literal targets must be byte-equal in both modes.

#ifndef TAXSEM_SMATCH_H_
#define TAXSEM_SMATCH_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxsem/sequence.h"
#include "taxsem/similarity.h"
#include "taxsem/triples.h"

namespace taxsem {

class ConceptDictionary;
struct DictEntry;

enum class MatchMode { kHard, kSoft };
enum class SimilaritySource { kTax, kWordNetNounOracle };

struct MatchConfig {
  MatchMode mode = MatchMode::kHard;
  int restarts = 8;
  SimilaritySource source = SimilaritySource::kTax;
  uint64_t seed = 42;
};

struct MatchResult {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  // mapping[p] is the gold node of predicted node p, or -1.
  std::vector<int> mapping;
  double matched_weight = 0;
  size_t gold_triples = 0;
  size_t pred_triples = 0;
};

// Graded token similarity in [0, 1].
class TokenSimilarity {
 public:
  virtual ~TokenSimilarity() = default;
  virtual double Concept(std::string_view a, std::string_view b) const = 0;
  virtual double Label(std::string_view a, std::string_view b) const = 0;
};

// 1 on string equality, 0 otherwise.
class ExactSimilarity : public TokenSimilarity {
 public:
  double Concept(std::string_view a, std::string_view b) const override;
  double Label(std::string_view a, std::string_view b) const override;
};

// Wu-Palmer similarity over taxonomical codes. TAX tokens are parsed
// directly; LPS and WID tokens are resolved through the dictionary. Tokens
// without a code (operators, relations, unknown tokens) match on equality.
class TaxSimilarity : public TokenSimilarity {
 public:
  TaxSimilarity(const ConceptDictionary &dict, Format format,
                DepthConvention convention = DepthConvention::kLabelsOnly);
  double Concept(std::string_view a, std::string_view b) const override;
  double Label(std::string_view a, std::string_view b) const override;

 protected:
  std::optional<TaxCode> CodeOf(std::string_view token) const;
  const DictEntry *EntryOf(std::string_view token) const;

  const ConceptDictionary &dict_;
  Format format_;
  DepthConvention convention_;
};

// Concepts that both resolve to noun synsets are scored with WordNet
// Wu-Palmer; everything else falls back to TaxSimilarity.
class WordNetNounSimilarity : public TaxSimilarity {
 public:
  WordNetNounSimilarity(const ConceptDictionary &dict, Format format,
                        const WordNetSimilarity &wordnet);
  double Concept(std::string_view a, std::string_view b) const override;

 private:
  const WordNetSimilarity &wordnet_;
};

// Similarity used for `config`: exact for hard mode, else by source.
// `wordnet` is required for the WordNet source.
std::unique_ptr<TokenSimilarity> MakeSimilarity(
    const MatchConfig &config, const ConceptDictionary *dict, Format format,
    const WordNetSimilarity *wordnet = nullptr);

// Best mapping found by hill climbing from a greedy start and
// config.restarts - 1 random starts.
MatchResult Smatch(const TripleGraph &gold, const TripleGraph &pred,
                   const MatchConfig &config, const TokenSimilarity &sim);

// Optimum over every injective mapping. Exponential; for small graphs.
MatchResult SmatchExhaustive(const TripleGraph &gold, const TripleGraph &pred,
                             const TokenSimilarity &sim);

// Weight of a fixed mapping.
double MappingWeight(const TripleGraph &gold, const TripleGraph &pred,
                     const std::vector<int> &mapping,
                     const TokenSimilarity &sim);

struct CorpusItem {
  int index = 0;
  bool well_formed = true;
  std::string faults;
  MatchResult result;
};

struct CorpusResult {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  // Share of ill-formed predicted blocks, in [0, 1].
  double ifr = 0;
  std::vector<CorpusItem> items;

  // Per-item TSV with a header line.
  std::string ItemsTsv() const;
};

// Micro-averaged Smatch over aligned blocks. Ill-formed predicted blocks
// contribute no matched or predicted triples; their gold triples still
// count. Block i is searched with seed config.seed + i. Throws a data error
// on block count mismatch or an ill-formed gold block.
CorpusResult CorpusSmatch(const std::vector<std::string> &gold_blocks,
                          const std::vector<std::string> &pred_blocks,
                          const ParseOptions &options,
                          const MatchConfig &config,
                          const TokenSimilarity &sim, int jobs);

}  // namespace taxsem

#endif  // TAXSEM_SMATCH_H_
