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

// Wu-Palmer similarity, 2 * depth(lcs) / (depth(a) + depth(b)), over
// taxonomical codes and over the raw WordNet noun graph.

#ifndef TAXSEM_SIMILARITY_H_
#define TAXSEM_SIMILARITY_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "taxsem/tax_code.h"
#include "taxsem/wordnet.h"

namespace taxsem {

enum class DepthConvention {
  // Depth counts labels only; the POS prefix is ignored, so a verb under a
  // noun is similar to that noun.
  kLabelsOnly,
  // The POS prefix counts as the first label; codes with different prefixes
  // score 0.
  kWithPrefix,
};

// Wu-Palmer score of two normalized label strings (see
// TaxCode::Normalized): 2 * lcp / (|a| + |b|). Both empty scores 1.
double WpsLabels(std::u32string_view a, std::u32string_view b);

// Throws a data error if the codes have different widths.
double WpsTax(const TaxCode &a, const TaxCode &b,
              DepthConvention convention = DepthConvention::kLabelsOnly);

// Absolute difference of two identifiers.
uint64_t WidDistance(uint32_t a, uint32_t b);

// Classic Wu-Palmer over the WordNet noun graph with hypernym and instance
// hypernym edges: the subsumer is the common ancestor of greatest minimum
// depth (the first by name on ties, or `a` itself), depth(lcs) is its
// maximum depth plus one, and each side adds its shortest path length to the
// subsumer.
class WordNetSimilarity {
 public:
  explicit WordNetSimilarity(const WordNetStore &store);

  // Throws a data error for non-noun input.
  double Wup(SynsetId a, SynsetId b) const;

  int MinDepth(SynsetId id) const;
  int MaxDepth(SynsetId id) const;

 private:
  int IndexOf(SynsetId id) const;
  // Shortest distances from a synset to itself and each ancestor.
  std::vector<std::pair<int, int>> Ancestors(int index) const;

  const WordNetStore &store_;
  std::vector<SynsetId> ids_;
  std::vector<std::vector<int>> parents_;
  std::vector<int> min_depth_;
  std::vector<int> max_depth_;
  std::vector<std::string> names_;
};

}  // namespace taxsem

#endif  // TAXSEM_SIMILARITY_H_
