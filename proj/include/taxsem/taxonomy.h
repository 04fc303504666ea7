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

// Builds one tree over all WordNet synsets rooted at entity.n.01 and derives
// a taxonomical code for every synset from its path in that tree.
//
// Nouns follow their first hypernym. Verbs follow their first hypernym;
// verb roots hang under a derivationally related noun. Adjective heads hang
// under a related noun, antonym pairs share one node and differ only in
// polarity, and satellites hang under their heads. Adverbs share the node of
// the adjective they derive from. Synsets with no usable link go under a
// synthetic fallback node below the root.

#ifndef TAXSEM_TAXONOMY_H_
#define TAXSEM_TAXONOMY_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "taxsem/tax_code.h"
#include "taxsem/wordnet.h"

namespace taxsem {

// Identifier written to dictionary headers; changes whenever the attachment
// or labeling rules change.
const char *TaxonomyPolicyId();

struct TaxonomyNode {
  int parent = -1;
  // Synset that introduced the node. Invalid for synthetic nodes.
  SynsetId owner;
  // Preassigned label of synthetic nodes, 0 otherwise.
  char32_t fixed_label = 0;
  char32_t label = 0;
  std::vector<int> children;
  // Label path from the root, one character per level.
  std::u32string labels;
};

struct SynsetPlacement {
  int node = -1;
  char prefix = 'n';
  Polarity polarity = Polarity::kNone;
};

class Taxonomy {
 public:
  const std::vector<TaxonomyNode> &nodes() const { return nodes_; }
  int root() const { return 0; }
  int fallback_node() const { return fallback_node_; }
  int width() const { return width_; }

  // Placement and code of a synset. Throws a not-found error if the synset
  // has no code.
  const SynsetPlacement &Placement(SynsetId id) const;
  TaxCode Code(SynsetId id) const;
  bool Has(SynsetId id) const { return placement_.count(id.value()) > 0; }

  // All placed synsets in ascending id order.
  const std::vector<SynsetId> &synsets() const { return synsets_; }

  // True if the node lies under the fallback subtree.
  bool InFallback(int node) const;

  // Warnings about synsets placed under the fallback node.
  const std::vector<std::string> &warnings() const { return warnings_; }

 private:
  friend class TaxonomyBuilder;

  std::vector<TaxonomyNode> nodes_;
  std::unordered_map<uint32_t, SynsetPlacement> placement_;
  std::vector<SynsetId> synsets_;
  std::vector<std::string> warnings_;
  int fallback_node_ = -1;
  int width_ = 0;
};

class TaxonomyBuilder {
 public:
  explicit TaxonomyBuilder(const WordNetStore &store);

  // Stages must run in this order.
  void AddNouns();
  void AddVerbs();
  void AddAdjectivesAndAdverbs();

  // Assigns labels, fixes the pad width and checks that no two synsets share
  // a code. Throws a build error on alphabet overflow or a code collision.
  Taxonomy Finish();

  // Runs all stages.
  static Taxonomy Build(const WordNetStore &store);

 private:
  enum FallbackGroup { kVerbGroup = 0, kAdjGroup = 1, kAdvGroup = 2 };

  int NewNode(int parent, SynsetId owner);
  void Place(SynsetId id, int node, Polarity polarity);
  int NodeOf(SynsetId id) const;
  // Walks up from `node`; returns true if the chain ends in a node waiting
  // for fallback placement.
  bool EndsInFallback(int node) const;
  bool Reaches(int from, int target) const;
  void AddToFallback(int node, FallbackGroup group, const std::string &why);
  const Synset *AdverbTarget(const Synset &s) const;

  const WordNetStore &store_;
  Taxonomy tax_;
  std::vector<int> fallback_members_[3];
  std::vector<bool> pending_fallback_;
};

}  // namespace taxsem

#endif  // TAXSEM_TAXONOMY_H_
