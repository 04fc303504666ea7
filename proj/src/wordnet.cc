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

#include "taxsem/wordnet.h"

#include <algorithm>
#include <cstdio>

#include "taxsem/util.h"

namespace taxsem {

char PosLetter(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return 'n';
    case Pos::kVerb: return 'v';
    case Pos::kAdj: return 'a';
    case Pos::kAdv: return 'r';
  }
  return '?';
}

std::optional<Pos> PosFromLetter(char letter) {
  switch (letter) {
    case 'n': return Pos::kNoun;
    case 'v': return Pos::kVerb;
    case 'a':
    case 's': return Pos::kAdj;
    case 'r': return Pos::kAdv;
  }
  return std::nullopt;
}

std::optional<SynsetId> SynsetId::Parse(std::string_view text) {
  uint64_t value;
  if (text.size() != 9 || !ParseUint(text, &value)) return std::nullopt;
  SynsetId id = FromValue(static_cast<uint32_t>(value));
  if (!id.valid()) return std::nullopt;
  return id;
}

std::string SynsetId::ToString() const {
  char buf[16];
  snprintf(buf, sizeof(buf), "%09u", value_);
  return buf;
}

PointerType PointerTypeFromSymbol(std::string_view s) {
  if (s == "@") return PointerType::kHypernym;
  if (s == "@i") return PointerType::kInstanceHypernym;
  if (s == "~") return PointerType::kHyponym;
  if (s == "~i") return PointerType::kInstanceHyponym;
  if (s == "*") return PointerType::kEntailment;
  if (s == "&") return PointerType::kSimilarTo;
  if (s == "!") return PointerType::kAntonym;
  if (s == "\\") return PointerType::kPertainym;
  if (s == "+") return PointerType::kDerivation;
  if (s == "=") return PointerType::kAttribute;
  return PointerType::kOther;
}

std::string RenderLps(std::string_view lemma, Pos pos, int sense) {
  std::string result = ToLower(lemma);
  for (char &c : result) {
    if (c == ' ') c = '_';
  }
  char buf[16];
  snprintf(buf, sizeof(buf), ".%c.%02d", PosLetter(pos), sense);
  result += buf;
  return result;
}

std::optional<LpsKey> LpsKey::Parse(std::string_view text) {
  // lemma.p.NN; the lemma may contain dots (e.g. "st._john's_wort").
  if (text.size() < 5) return std::nullopt;
  size_t last = text.rfind('.');
  if (last == std::string_view::npos || last < 3) return std::nullopt;
  if (text[last - 2] != '.') return std::nullopt;
  std::optional<Pos> pos = PosFromLetter(text[last - 1]);
  if (!pos || text[last - 1] == 's') return std::nullopt;
  uint64_t sense;
  std::string_view digits = text.substr(last + 1);
  if (digits.size() < 2 || !ParseUint(digits, &sense)) return std::nullopt;
  LpsKey key;
  key.lemma = std::string(text.substr(0, last - 2));
  if (key.lemma.empty()) return std::nullopt;
  key.pos = *pos;
  key.sense = static_cast<int>(sense);
  return key;
}

namespace {

struct SenseInfo {
  int sense;
  int tag_count;
};

// Key for the sense lookup: lowercase lemma, POS digit and offset.
std::string SenseLookupKey(std::string_view lemma, Pos pos, uint32_t offset) {
  std::string key = ToLower(lemma);
  key.push_back(' ');
  key.push_back(static_cast<char>('0' + static_cast<int>(pos)));
  key += std::to_string(offset);
  return key;
}

[[noreturn]] void Malformed(const std::string &file, int line,
                            const std::string &what) {
  throw Error(ErrorKind::kData, file + ":" + std::to_string(line) +
                                    ": malformed line: " + what);
}

uint32_t ParseHex(std::string_view text, const std::string &file, int line) {
  uint32_t value = 0;
  if (text.empty()) Malformed(file, line, "empty hex field");
  for (char c : text) {
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      d = c - 'A' + 10;
    } else {
      Malformed(file, line, "bad hex field '" + std::string(text) + "'");
    }
    value = value * 16 + d;
  }
  return value;
}

uint32_t ParseDec(std::string_view text, const std::string &file, int line) {
  uint64_t value;
  if (!ParseUint(text, &value)) {
    Malformed(file, line, "bad number '" + std::string(text) + "'");
  }
  return static_cast<uint32_t>(value);
}

void AddUnique(std::vector<SynsetId> *list, SynsetId id) {
  if (std::find(list->begin(), list->end(), id) == list->end()) {
    list->push_back(id);
  }
}

void LoadSenseIndex(const std::string &path,
                    std::unordered_map<std::string, SenseInfo> *senses) {
  std::string text = ReadFile(path);
  int lineno = 0;
  for (std::string_view line : SplitLines(text)) {
    lineno++;
    if (line.empty()) continue;
    std::vector<std::string_view> f = SplitWhitespace(line);
    if (f.size() < 4) Malformed(path, lineno, "expected 4 fields");
    std::string_view key = f[0];
    size_t pct = key.find('%');
    if (pct == std::string_view::npos || pct + 1 >= key.size()) {
      Malformed(path, lineno, "bad sense key");
    }
    Pos pos;
    switch (key[pct + 1]) {
      case '1': pos = Pos::kNoun; break;
      case '2': pos = Pos::kVerb; break;
      case '3':
      case '5': pos = Pos::kAdj; break;
      case '4': pos = Pos::kAdv; break;
      default: Malformed(path, lineno, "bad ss_type in sense key");
    }
    uint32_t offset = ParseDec(f[1], path, lineno);
    SenseInfo info;
    info.sense = ParseDec(f[2], path, lineno);
    info.tag_count = ParseDec(f[3], path, lineno);
    (*senses)[SenseLookupKey(key.substr(0, pct), pos, offset)] = info;
  }
}

void LoadDataFile(const std::string &path, Pos pos,
                  const std::unordered_map<std::string, SenseInfo> &senses,
                  std::vector<Synset> *synsets) {
  std::string text = ReadFile(path);
  int lineno = 0;
  for (std::string_view line : SplitLines(text)) {
    lineno++;
    if (line.empty() || line[0] == ' ') continue;  // license header
    size_t bar = line.find('|');
    std::string_view head = line.substr(0, bar);
    std::vector<std::string_view> f = SplitWhitespace(head);
    if (f.size() < 5) Malformed(path, lineno, "too few fields");
    Synset s;
    s.id = SynsetId(pos, ParseDec(f[0], path, lineno));
    std::string_view ss_type = f[2];
    if (ss_type == "n") {
      s.type = SynsetType::kNoun;
    } else if (ss_type == "v") {
      s.type = SynsetType::kVerb;
    } else if (ss_type == "a") {
      s.type = SynsetType::kAdjHead;
    } else if (ss_type == "s") {
      s.type = SynsetType::kAdjSatellite;
    } else if (ss_type == "r") {
      s.type = SynsetType::kAdverb;
    } else {
      Malformed(path, lineno, "bad ss_type");
    }
    size_t i = 3;
    uint32_t w_cnt = ParseHex(f[i++], path, lineno);
    if (i + 2 * w_cnt >= f.size()) Malformed(path, lineno, "word list");
    for (uint32_t w = 0; w < w_cnt; ++w) {
      std::string_view word = f[i];
      i += 2;  // word, lex_id
      size_t paren = word.find('(');
      if (paren != std::string_view::npos && pos == Pos::kAdj) {
        word = word.substr(0, paren);
      }
      Member m;
      m.lemma = std::string(word);
      auto it = senses.find(SenseLookupKey(word, pos, s.id.offset()));
      if (it == senses.end()) {
        Malformed(path, lineno,
                  "member '" + m.lemma + "' missing from index.sense");
      }
      m.sense = it->second.sense;
      m.tag_count = it->second.tag_count;
      s.members.push_back(std::move(m));
    }
    uint32_t p_cnt = ParseDec(f[i++], path, lineno);
    if (i + 4 * p_cnt > f.size()) Malformed(path, lineno, "pointer list");
    for (uint32_t p = 0; p < p_cnt; ++p) {
      Pointer ptr;
      ptr.type = PointerTypeFromSymbol(f[i]);
      std::optional<Pos> target_pos;
      if (f[i + 2].size() == 1) target_pos = PosFromLetter(f[i + 2][0]);
      if (!target_pos) Malformed(path, lineno, "bad pointer POS");
      ptr.target = SynsetId(*target_pos, ParseDec(f[i + 1], path, lineno));
      std::string_view st = f[i + 3];
      if (st.size() != 4) Malformed(path, lineno, "bad source/target field");
      ptr.source_word = ParseHex(st.substr(0, 2), path, lineno);
      ptr.target_word = ParseHex(st.substr(2, 2), path, lineno);
      i += 4;
      switch (ptr.type) {
        case PointerType::kHypernym:
          AddUnique(&s.hypernyms, ptr.target);
          break;
        case PointerType::kInstanceHypernym:
          AddUnique(&s.hypernyms, ptr.target);
          AddUnique(&s.instance_hypernyms, ptr.target);
          break;
        case PointerType::kHyponym:
        case PointerType::kInstanceHyponym:
          AddUnique(&s.hyponyms, ptr.target);
          break;
        case PointerType::kEntailment:
          AddUnique(&s.entailments, ptr.target);
          break;
        case PointerType::kSimilarTo:
          AddUnique(&s.similar_to, ptr.target);
          break;
        case PointerType::kAntonym:
          AddUnique(&s.antonyms, ptr.target);
          break;
        case PointerType::kPertainym:
          AddUnique(&s.pertainyms, ptr.target);
          break;
        case PointerType::kDerivation:
          AddUnique(&s.derivationally_related, ptr.target);
          break;
        case PointerType::kAttribute:
          AddUnique(&s.attributes, ptr.target);
          break;
        case PointerType::kOther:
          break;
      }
      s.pointers.push_back(ptr);
    }
    if (bar != std::string_view::npos) {
      s.gloss = std::string(Trim(line.substr(bar + 1)));
    }
    synsets->push_back(std::move(s));
  }
}

}  // namespace

WordNetStore WordNetStore::Load(const std::string &dir) {
  WordNetStore store;
  std::unordered_map<std::string, SenseInfo> senses;
  LoadSenseIndex(dir + "/index.sense", &senses);
  static const struct {
    const char *file;
    Pos pos;
  } kFiles[] = {
      {"data.noun", Pos::kNoun},
      {"data.verb", Pos::kVerb},
      {"data.adj", Pos::kAdj},
      {"data.adv", Pos::kAdv},
  };
  for (const auto &entry : kFiles) {
    LoadDataFile(dir + "/" + entry.file, entry.pos, senses, &store.synsets_);
  }
  std::sort(store.synsets_.begin(), store.synsets_.end(),
            [](const Synset &a, const Synset &b) { return a.id < b.id; });
  store.index_.reserve(store.synsets_.size());
  for (size_t i = 0; i < store.synsets_.size(); ++i) {
    const Synset &s = store.synsets_[i];
    store.index_[s.id.value()] = static_cast<uint32_t>(i);
    for (const Member &m : s.members) {
      store.lps_.emplace(RenderLps(m.lemma, s.pos(), m.sense), s.id);
    }
  }
  // Pointer targets must exist.
  for (const Synset &s : store.synsets_) {
    for (const Pointer &p : s.pointers) {
      if (store.Find(p.target) == nullptr) {
        throw Error(ErrorKind::kData, "synset " + s.id.ToString() +
                                          " points to unknown synset " +
                                          p.target.ToString());
      }
    }
  }
  return store;
}

const Synset *WordNetStore::Find(SynsetId id) const {
  auto it = index_.find(id.value());
  if (it == index_.end()) return nullptr;
  return &synsets_[it->second];
}

const Synset &WordNetStore::Get(SynsetId id) const {
  const Synset *s = Find(id);
  if (s == nullptr) {
    throw Error(ErrorKind::kNotFound, "unknown synset " + id.ToString());
  }
  return *s;
}

SynsetId WordNetStore::Resolve(const LpsKey &key) const {
  return Resolve(key.ToString());
}

SynsetId WordNetStore::Resolve(std::string_view lps) const {
  std::optional<SynsetId> id = TryResolve(lps);
  if (!id) {
    throw Error(ErrorKind::kNotFound, "unknown LPS key " + std::string(lps));
  }
  return *id;
}

std::optional<SynsetId> WordNetStore::TryResolve(std::string_view lps) const {
  auto it = lps_.find(std::string(lps));
  if (it == lps_.end()) return std::nullopt;
  return it->second;
}

std::string WordNetStore::MemberLps(const Synset &synset, size_t index) const {
  const Member &m = synset.members[index];
  return RenderLps(m.lemma, synset.pos(), m.sense);
}

size_t WordNetStore::Count(Pos pos) const {
  size_t n = 0;
  for (const Synset &s : synsets_) n += s.pos() == pos;
  return n;
}

}  // namespace taxsem
