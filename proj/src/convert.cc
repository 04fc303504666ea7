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

#include "taxsem/convert.h"

#include <cstdio>

namespace taxsem {

const DictEntry *LookupToken(std::string_view token, Format format,
                             const ConceptDictionary &dict) {
  switch (format) {
    case Format::kLps:
      return dict.FindByLps(token);
    case Format::kWid: {
      uint64_t wid;
      if (token.size() == 9 && ParseUint(token, &wid)) {
        return dict.FindByWid(static_cast<uint32_t>(wid));
      }
      const DictEntry *e = dict.FindByCode(token);
      if (e != nullptr && (e->kind == EntryKind::kOperator ||
                           e->kind == EntryKind::kRelation)) {
        return e;
      }
      return nullptr;
    }
    case Format::kTax:
      return dict.FindByCode(token);
  }
  return nullptr;
}

std::string RenderEntry(const DictEntry &entry, Format format) {
  switch (format) {
    case Format::kLps:
      return entry.name;
    case Format::kWid:
      if (entry.kind == EntryKind::kOperator ||
          entry.kind == EntryKind::kRelation) {
        return entry.code;
      } else {
        char buf[16];
        snprintf(buf, sizeof(buf), "%09u", entry.wid);
        return buf;
      }
    case Format::kTax:
      return entry.code;
  }
  return "";
}

ParseOptions OptionsFor(Format format, const ConceptDictionary &dict) {
  ParseOptions options;
  options.format = format;
  options.width = dict.width();
  options.role_width = dict.role_width();
  return options;
}

SequenceMR Convert(const SequenceMR &mr, Format from, Format to,
                   const ConceptDictionary &dict) {
  SequenceMR out = mr;
  if (from == to) return out;
  auto map = [&](const std::string &token, int line, bool head,
                 bool relation) -> std::string {
    const DictEntry *e = LookupToken(token, from, dict);
    bool ok = e != nullptr;
    if (ok && head) {
      ok = relation ? e->kind == EntryKind::kRelation
                    : e->kind == EntryKind::kSynset;
    } else if (ok) {
      ok = e->kind == EntryKind::kRole || e->kind == EntryKind::kOperator;
    }
    if (!ok) {
      throw SequenceError(Fault{FaultKind::kUnknownToken, line, token});
    }
    return RenderEntry(*e, to);
  };
  for (size_t i = 0; i < out.lines.size(); ++i) {
    Line &line = out.lines[i];
    int lineno = static_cast<int>(i) + 1;
    line.head = map(line.head, lineno, true, line.relation);
    for (Edge &edge : line.edges) {
      if (!edge.label.empty()) {
        edge.label = map(edge.label, lineno, false, false);
      }
    }
  }
  return out;
}

}  // namespace taxsem
