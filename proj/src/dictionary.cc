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

#include <algorithm>

#include "taxsem/symbols.h"
#include "taxsem/util.h"

namespace taxsem {

namespace {

constexpr std::string_view kMagic = "#taxsem-dictionary";

std::optional<EntryKind> KindFromName(std::string_view name) {
  if (name == "synset") return EntryKind::kSynset;
  if (name == "role") return EntryKind::kRole;
  if (name == "operator") return EntryKind::kOperator;
  if (name == "relation") return EntryKind::kRelation;
  return std::nullopt;
}

}  // namespace

const char *EntryKindName(EntryKind kind) {
  switch (kind) {
    case EntryKind::kSynset: return "synset";
    case EntryKind::kRole: return "role";
    case EntryKind::kOperator: return "operator";
    case EntryKind::kRelation: return "relation";
  }
  return "?";
}

void ConceptDictionary::Add(DictEntry entry) {
  uint32_t index = entries_.size();
  auto claim = [&](std::unordered_map<std::string, uint32_t> *map,
                   const std::string &key, const char *what) {
    auto [it, inserted] = map->emplace(key, index);
    if (!inserted) {
      std::string other =
          it->second == index ? entry.name : entries_[it->second].name;
      throw Error(ErrorKind::kBuild, std::string("duplicate ") + what + " '" +
                                         key + "' for " + entry.name +
                                         " and " + other);
    }
  };
  if (!by_wid_.emplace(entry.wid, index).second) {
    throw Error(ErrorKind::kBuild,
                "duplicate WID " + std::to_string(entry.wid));
  }
  claim(&by_code_, entry.code, "code");
  if (entry.kind == EntryKind::kSynset) {
    for (const std::string &key : entry.synonyms) claim(&by_lps_, key, "LPS");
  } else {
    claim(&by_lps_, entry.name, "name");
  }
  entries_.push_back(std::move(entry));
}

const DictEntry *ConceptDictionary::FindByLps(std::string_view key) const {
  auto it = by_lps_.find(std::string(key));
  return it == by_lps_.end() ? nullptr : &entries_[it->second];
}

const DictEntry *ConceptDictionary::FindByWid(uint32_t wid) const {
  auto it = by_wid_.find(wid);
  return it == by_wid_.end() ? nullptr : &entries_[it->second];
}

const DictEntry *ConceptDictionary::FindByCode(std::string_view code) const {
  auto it = by_code_.find(std::string(code));
  return it == by_code_.end() ? nullptr : &entries_[it->second];
}

std::optional<TaxCode> ConceptDictionary::TaxCodeOf(
    const DictEntry &entry) const {
  switch (entry.kind) {
    case EntryKind::kSynset: return TaxCode::Parse(entry.code, width_);
    case EntryKind::kRole: return TaxCode::Parse(entry.code, role_width_);
    default: return std::nullopt;
  }
}

std::string ConceptDictionary::Serialize() const {
  std::string out;
  out += kMagic;
  out += "\twordnet=" + version_;
  out += "\tpolicy=" + policy_;
  out += "\twidth=" + std::to_string(width_);
  out += "\trole_width=" + std::to_string(role_width_);
  out += "\n#kind\twid\tlps_or_name\ttaxcode\tsynonyms\n";
  for (const DictEntry &e : entries_) {
    out += EntryKindName(e.kind);
    out += '\t';
    out += std::to_string(e.wid);
    out += '\t';
    out += e.name;
    out += '\t';
    out += e.code;
    out += '\t';
    for (size_t i = 0; i < e.synonyms.size(); ++i) {
      if (i > 0) out += ',';
      out += e.synonyms[i];
    }
    out += '\n';
  }
  return out;
}

ConceptDictionary ConceptDictionary::Parse(std::string_view text) {
  ConceptDictionary dict;
  bool header = false;
  int lineno = 0;
  for (std::string_view line : SplitLines(text)) {
    lineno++;
    if (line.empty()) continue;
    auto fail = [&](const std::string &what) {
      throw Error(ErrorKind::kData, "dictionary line " +
                                        std::to_string(lineno) + ": " + what);
    };
    if (line[0] == '#') {
      std::vector<std::string_view> fields = Split(line, '\t');
      if (fields[0] != kMagic) continue;
      header = true;
      for (size_t i = 1; i < fields.size(); ++i) {
        size_t eq = fields[i].find('=');
        if (eq == std::string_view::npos) fail("bad header field");
        std::string_view key = fields[i].substr(0, eq);
        std::string value(fields[i].substr(eq + 1));
        uint64_t n = 0;
        if (key == "wordnet") {
          dict.version_ = value;
        } else if (key == "policy") {
          dict.policy_ = value;
        } else if (key == "width") {
          if (!ParseUint(value, &n)) fail("bad width");
          dict.width_ = static_cast<int>(n);
        } else if (key == "role_width") {
          if (!ParseUint(value, &n)) fail("bad role width");
          dict.role_width_ = static_cast<int>(n);
        }
      }
      continue;
    }
    if (!header) fail("missing dictionary header");
    std::vector<std::string_view> f = Split(line, '\t');
    if (f.size() != 5) fail("expected 5 tab-separated fields");
    DictEntry e;
    std::optional<EntryKind> kind = KindFromName(f[0]);
    if (!kind) fail("unknown entry kind");
    e.kind = *kind;
    uint64_t wid;
    if (!ParseUint(f[1], &wid) || f[1].size() != 9) fail("bad WID");
    e.wid = static_cast<uint32_t>(wid);
    e.name = std::string(f[2]);
    e.code = std::string(f[3]);
    if (!f[4].empty()) {
      for (std::string_view s : Split(f[4], ',')) e.synonyms.emplace_back(s);
    }
    try {
      dict.Add(std::move(e));
    } catch (const Error &err) {
      fail(err.what());
    }
  }
  if (!header) throw Error(ErrorKind::kData, "missing dictionary header");
  return dict;
}

ConceptDictionary ConceptDictionary::Load(const std::string &path) {
  return Parse(ReadFile(path));
}

void ConceptDictionary::Save(const std::string &path) const {
  WriteFileAtomic(path, Serialize());
}

size_t CanonicalMember(const Synset &synset) {
  size_t best = 0;
  for (size_t i = 1; i < synset.members.size(); ++i) {
    if (synset.members[i].tag_count > synset.members[best].tag_count) {
      best = i;
    }
  }
  return best;
}

ConceptDictionary AssembleDictionary(const WordNetStore &store,
                                     const Taxonomy &taxonomy) {
  ConceptDictionary dict;
  dict.set_version("3.0");
  dict.set_policy(std::string(TaxonomyPolicyId()) + ";" + RoleTableVersion());
  dict.set_width(taxonomy.width());
  dict.set_role_width(kRoleWidth);
  for (const Synset &s : store.synsets()) {
    DictEntry e;
    e.kind = EntryKind::kSynset;
    e.wid = s.id.value();
    e.name = store.MemberLps(s, CanonicalMember(s));
    e.code = taxonomy.Code(s.id).ToString();
    for (size_t i = 0; i < s.members.size(); ++i) {
      std::string key = store.MemberLps(s, i);
      if (key.find(',') != std::string::npos) {
        throw Error(ErrorKind::kBuild, "LPS key contains a comma: " + key);
      }
      // Members differing only in case share one key.
      if (std::find(e.synonyms.begin(), e.synonyms.end(), key) ==
          e.synonyms.end()) {
        e.synonyms.push_back(std::move(key));
      }
    }
    dict.Add(std::move(e));
  }
  for (const RoleInfo &r : Roles()) {
    DictEntry e;
    e.kind = EntryKind::kRole;
    e.wid = r.wid;
    e.name = r.name;
    e.code = r.Code();
    dict.Add(std::move(e));
  }
  for (const SymbolInfo &r : DiscourseRelations()) {
    DictEntry e;
    e.kind = EntryKind::kRelation;
    e.wid = r.wid;
    e.name = r.name;
    e.code = r.symbol;
    dict.Add(std::move(e));
  }
  for (const SymbolInfo &o : Operators()) {
    DictEntry e;
    e.kind = EntryKind::kOperator;
    e.wid = o.wid;
    e.name = o.name;
    e.code = o.symbol;
    dict.Add(std::move(e));
  }
  return dict;
}

}  // namespace taxsem
