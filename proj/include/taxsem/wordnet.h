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

// In-memory WordNet 3.0 synset graph read from the flat wndb files
// (data.noun, data.verb, data.adj, data.adv and index.sense).

#ifndef TAXSEM_WORDNET_H_
#define TAXSEM_WORDNET_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace taxsem {

enum class Pos : int { kNoun = 1, kVerb = 2, kAdj = 3, kAdv = 4 };

// LPS part-of-speech letter: n, v, a, r.
char PosLetter(Pos pos);
std::optional<Pos> PosFromLetter(char letter);

// A 9-digit synset identifier: POS digit followed by the 8-digit byte offset.
class SynsetId {
 public:
  SynsetId() = default;
  SynsetId(Pos pos, uint32_t offset)
      : value_(static_cast<uint32_t>(pos) * 100000000u + offset) {}

  static SynsetId FromValue(uint32_t value) {
    SynsetId id;
    id.value_ = value;
    return id;
  }

  // Parses exactly nine digits with a leading POS digit 1-4.
  static std::optional<SynsetId> Parse(std::string_view text);

  uint32_t value() const { return value_; }
  Pos pos() const { return static_cast<Pos>(value_ / 100000000u); }
  uint32_t offset() const { return value_ % 100000000u; }
  bool valid() const { return value_ >= 100000000u && value_ < 500000000u; }
  std::string ToString() const;

  bool operator==(const SynsetId &other) const = default;
  auto operator<=>(const SynsetId &other) const = default;

 private:
  uint32_t value_ = 0;
};

struct SynsetIdHash {
  size_t operator()(SynsetId id) const { return id.value(); }
};

enum class SynsetType { kNoun, kVerb, kAdjHead, kAdjSatellite, kAdverb };

enum class PointerType {
  kHypernym,          // @
  kInstanceHypernym,  // @i
  kHyponym,           // ~
  kInstanceHyponym,   // ~i
  kEntailment,        // *
  kSimilarTo,         // &
  kAntonym,           // !
  kPertainym,         // \ (also "derived from adjective" for adverbs)
  kDerivation,        // +
  kAttribute,         // =
  kOther,
};

PointerType PointerTypeFromSymbol(std::string_view symbol);

struct Pointer {
  PointerType type;
  SynsetId target;
  // 1-based word numbers for lexical pointers; 0 for semantic pointers.
  int source_word;
  int target_word;
};

struct Member {
  // Lemma as written in the data file (case kept, underscores for spaces,
  // adjective markers removed).
  std::string lemma;
  int sense = 0;
  int tag_count = 0;
};

struct Synset {
  SynsetId id;
  SynsetType type;
  std::vector<Member> members;
  std::string gloss;
  // All pointers in data-file order.
  std::vector<Pointer> pointers;

  // Typed views of `pointers`, in data-file order without duplicates.
  // hypernyms includes instance hypernyms, hyponyms includes instances.
  std::vector<SynsetId> hypernyms;
  std::vector<SynsetId> instance_hypernyms;
  std::vector<SynsetId> hyponyms;
  std::vector<SynsetId> entailments;
  std::vector<SynsetId> similar_to;
  std::vector<SynsetId> antonyms;
  std::vector<SynsetId> pertainyms;
  std::vector<SynsetId> derivationally_related;
  std::vector<SynsetId> attributes;

  Pos pos() const { return id.pos(); }
};

// Renders lemma.p.NN with the lemma lowercased.
std::string RenderLps(std::string_view lemma, Pos pos, int sense);

struct LpsKey {
  std::string lemma;
  Pos pos = Pos::kNoun;
  int sense = 0;

  // Parses "lemma.p.NN". The lemma may itself contain dots.
  static std::optional<LpsKey> Parse(std::string_view text);
  std::string ToString() const { return RenderLps(lemma, pos, sense); }
};

class WordNetStore {
 public:
  // Loads the four data files and index.sense from `dir`. Throws a data
  // error naming the file on missing input or a malformed line.
  static WordNetStore Load(const std::string &dir);

  // Returns nullptr if the id is unknown.
  const Synset *Find(SynsetId id) const;
  const Synset &Get(SynsetId id) const;

  // Resolves an LPS key. Throws a not-found error carrying the key.
  SynsetId Resolve(const LpsKey &key) const;
  SynsetId Resolve(std::string_view lps) const;
  std::optional<SynsetId> TryResolve(std::string_view lps) const;

  // LPS key of member `index` of the synset.
  std::string MemberLps(const Synset &synset, size_t index) const;

  // Synsets in ascending id order.
  const std::vector<Synset> &synsets() const { return synsets_; }
  size_t Count(Pos pos) const;

 private:
  std::vector<Synset> synsets_;
  std::unordered_map<uint32_t, uint32_t> index_;
  std::unordered_map<std::string, SynsetId> lps_;
};

}  // namespace taxsem

#endif  // TAXSEM_WORDNET_H_
