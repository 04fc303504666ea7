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

// The concept dictionary maps every synset, role, operator and discourse
// relation between its three predicate forms: LPS name, 9-digit WID, and
// taxonomical code (or single-character symbol).
//
// TSV layout, one entry per line after '#' header lines:
//   kind  wid  lps_or_name  taxcode_or_symbol  synonyms(comma-separated)

#ifndef TAXSEM_DICTIONARY_H_
#define TAXSEM_DICTIONARY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taxsem/tax_code.h"
#include "taxsem/taxonomy.h"
#include "taxsem/wordnet.h"

namespace taxsem {

enum class EntryKind { kSynset, kRole, kOperator, kRelation };

const char *EntryKindName(EntryKind kind);

struct DictEntry {
  EntryKind kind = EntryKind::kSynset;
  uint32_t wid = 0;
  // Canonical LPS key for synsets, the name otherwise.
  std::string name;
  // Padded code for synsets and roles, the symbol for operators/relations.
  std::string code;
  // All member LPS keys of a synset, canonical one included.
  std::vector<std::string> synonyms;

  bool operator==(const DictEntry &other) const = default;
};

class ConceptDictionary {
 public:
  int width() const { return width_; }
  int role_width() const { return role_width_; }
  const std::string &policy() const { return policy_; }
  const std::string &version() const { return version_; }

  void set_width(int width) { width_ = width; }
  void set_role_width(int width) { role_width_ = width; }
  void set_policy(const std::string &policy) { policy_ = policy; }
  void set_version(const std::string &version) { version_ = version; }

  // Adds an entry and indexes it. Throws a build error if its WID, code or
  // one of its LPS keys is already taken.
  void Add(DictEntry entry);

  const std::vector<DictEntry> &entries() const { return entries_; }

  // Lookups return nullptr when absent. FindByLps accepts every synonym key
  // as well as role, operator and relation names.
  const DictEntry *FindByLps(std::string_view key) const;
  const DictEntry *FindByWid(uint32_t wid) const;
  const DictEntry *FindByCode(std::string_view code) const;

  // Parsed code of a synset or role entry.
  std::optional<TaxCode> TaxCodeOf(const DictEntry &entry) const;

  std::string Serialize() const;
  static ConceptDictionary Parse(std::string_view text);

  static ConceptDictionary Load(const std::string &path);
  void Save(const std::string &path) const;

  bool operator==(const ConceptDictionary &other) const {
    return width_ == other.width_ && role_width_ == other.role_width_ &&
           policy_ == other.policy_ && version_ == other.version_ &&
           entries_ == other.entries_;
  }

 private:
  int width_ = 0;
  int role_width_ = 0;
  std::string policy_;
  std::string version_;
  std::vector<DictEntry> entries_;
  std::unordered_map<std::string, uint32_t> by_lps_;
  std::unordered_map<uint32_t, uint32_t> by_wid_;
  std::unordered_map<std::string, uint32_t> by_code_;
};

// Canonical LPS member of a synset: the member with the highest tag count,
// the first one on ties.
size_t CanonicalMember(const Synset &synset);

// One entry per synset plus the role, operator and relation tables.
ConceptDictionary AssembleDictionary(const WordNetStore &store,
                                     const Taxonomy &taxonomy);

// Environment variable that overrides the dictionary path of the CLI.
constexpr const char *kDictionaryEnv = "TAXSEM_DICT";

}  // namespace taxsem

#endif  // TAXSEM_DICTIONARY_H_
