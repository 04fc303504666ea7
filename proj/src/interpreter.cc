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

#include "taxsem/interpreter.h"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "taxsem/convert.h"
#include "taxsem/similarity.h"
#include "taxsem/util.h"

namespace taxsem {

const char *DecisionName(Decision decision) {
  switch (decision) {
    case Decision::kExactDictionary: return "exact_dictionary";
    case Decision::kNearestByWps: return "nearest_by_wps";
    case Decision::kNearestByWid: return "nearest_by_wid";
    case Decision::kLiteralPassthrough: return "literal_passthrough";
  }
  return "?";
}

namespace {

uint64_t Pack(size_t length, uint32_t wid) {
  return (static_cast<uint64_t>(length) << 32) | wid;
}

size_t CommonPrefix(const std::u32string &a, const std::u32string &b) {
  size_t n = std::min(a.size(), b.size());
  size_t i = 0;
  while (i < n && a[i] == b[i]) i++;
  return i;
}

char WidClass(uint32_t wid) {
  char buf[16];
  snprintf(buf, sizeof(buf), "%09u", wid);
  return buf[0];
}

}  // namespace

void Interpreter::Group::Build() {
  std::sort(keys.begin(), keys.end(), [](const Key &a, const Key &b) {
    if (a.labels != b.labels) return a.labels < b.labels;
    return a.wid < b.wid;
  });
  table.clear();
  table.emplace_back();
  for (const Key &k : keys) table[0].push_back(Pack(k.labels.size(), k.wid));
  for (size_t span = 2; span <= keys.size(); span *= 2) {
    const std::vector<uint64_t> &prev = table.back();
    std::vector<uint64_t> level(keys.size() - span + 1);
    for (size_t i = 0; i < level.size(); ++i) {
      level[i] = std::min(prev[i], prev[i + span / 2]);
    }
    table.push_back(std::move(level));
  }
}

uint64_t Interpreter::Group::RangeMin(size_t lo, size_t hi) const {
  size_t level = 0;
  while ((size_t{2} << level) <= hi - lo) level++;
  return std::min(table[level][lo], table[level][hi - (size_t{1} << level)]);
}

Interpreter::Interpreter(const ConceptDictionary &dict) : dict_(dict) {
  for (const DictEntry &e : dict.entries()) {
    wids_[WidClass(e.wid)].push_back(e.wid);
    std::optional<TaxCode> code = dict.TaxCodeOf(e);
    if (!code) continue;
    Key key{code->Normalized(), e.wid, &e};
    by_prefix_[{code->prefix, code->width}].keys.push_back(key);
    by_width_[code->width].keys.push_back(key);
  }
  for (auto &[k, g] : by_prefix_) g.Build();
  for (auto &[k, g] : by_width_) g.Build();
  for (auto &[k, v] : wids_) std::sort(v.begin(), v.end());
}

const Interpreter::Group *Interpreter::GroupFor(const TaxCode &code) const {
  auto it = by_prefix_.find({code.prefix, code.width});
  if (it != by_prefix_.end() && !it->second.keys.empty()) return &it->second;
  auto wt = by_width_.find(code.width);
  if (wt != by_width_.end() && !wt->second.keys.empty()) return &wt->second;
  return nullptr;
}

Nearest Interpreter::NearestByWps(const TaxCode &code) const {
  const Group *group = GroupFor(code);
  if (group == nullptr) return {};
  const std::vector<Key> &keys = group->keys;
  std::u32string q = code.Normalized();
  uint64_t len = q.size();
  // Best score so far as the fraction num / den; scores are lcp/(L+m).
  uint64_t num = 0, den = 1;
  uint32_t best_wid = std::numeric_limits<uint32_t>::max();
  size_t lo = 0, hi = keys.size();
  for (size_t k = 1; k <= q.size(); ++k) {
    char32_t c = q[k - 1];
    auto first = keys.begin() + lo;
    auto last = keys.begin() + hi;
    auto new_lo = std::partition_point(first, last, [&](const Key &key) {
      return key.labels.size() < k || key.labels[k - 1] < c;
    });
    auto new_hi = std::partition_point(new_lo, last, [&](const Key &key) {
      return key.labels[k - 1] <= c;
    });
    lo = new_lo - keys.begin();
    hi = new_hi - keys.begin();
    if (lo >= hi) break;
    uint64_t v = group->RangeMin(lo, hi);
    uint64_t m = v >> 32;
    uint32_t wid = static_cast<uint32_t>(v);
    uint64_t lhs = k * den;
    uint64_t rhs = num * (len + m);
    if (lhs > rhs) {
      num = k;
      den = len + m;
      best_wid = wid;
    } else if (lhs == rhs) {
      best_wid = std::min(best_wid, wid);
    }
  }
  if (num == 0) {
    for (const Key &key : keys) best_wid = std::min(best_wid, key.wid);
  }
  Nearest result;
  result.entry = dict_.FindByWid(best_wid);
  if (result.entry != nullptr) {
    result.similarity = WpsTax(code, *dict_.TaxCodeOf(*result.entry));
  }
  return result;
}

Nearest Interpreter::NearestByScan(const TaxCode &code) const {
  const Group *group = GroupFor(code);
  if (group == nullptr) return {};
  std::u32string q = code.Normalized();
  uint64_t len = q.size();
  uint64_t num = 0, den = 1;
  uint32_t best_wid = std::numeric_limits<uint32_t>::max();
  for (const Key &key : group->keys) {
    uint64_t k = CommonPrefix(q, key.labels);
    uint64_t d = len + key.labels.size();
    uint64_t lhs = k * den;
    uint64_t rhs = num * d;
    if (lhs > rhs) {
      num = k;
      den = d;
      best_wid = key.wid;
    } else if (lhs == rhs) {
      best_wid = std::min(best_wid, key.wid);
    }
  }
  Nearest result;
  result.entry = dict_.FindByWid(best_wid);
  if (result.entry != nullptr) {
    result.similarity = WpsTax(code, *dict_.TaxCodeOf(*result.entry));
  }
  return result;
}

const DictEntry *Interpreter::NearestByWid(uint32_t wid) const {
  auto it = wids_.find(WidClass(wid));
  if (it == wids_.end() || it->second.empty()) return nullptr;
  const std::vector<uint32_t> &v = it->second;
  auto pos = std::lower_bound(v.begin(), v.end(), wid);
  uint32_t best;
  if (pos == v.end()) {
    best = v.back();
  } else if (pos == v.begin()) {
    best = *pos;
  } else {
    uint32_t below = *(pos - 1);
    // Ties go to the smaller WID.
    best = WidDistance(below, wid) <= WidDistance(*pos, wid) ? below : *pos;
  }
  return dict_.FindByWid(best);
}

TraceRecord Interpreter::InterpretToken(std::string_view token,
                                        Format format) const {
  TraceRecord record;
  record.input = std::string(token);
  record.output = record.input;
  if (const DictEntry *e = LookupToken(token, format, dict_)) {
    record.decision = Decision::kExactDictionary;
    record.output = RenderEntry(*e, Format::kLps);
    record.similarity = 1.0;
    return record;
  }
  if (format == Format::kTax) {
    std::optional<TaxCode> code = TaxCode::Parse(token, dict_.width());
    if (!code) code = TaxCode::Parse(token, dict_.role_width());
    if (code) {
      Nearest nearest = NearestByWps(*code);
      if (nearest.entry != nullptr) {
        record.decision = Decision::kNearestByWps;
        record.output = RenderEntry(*nearest.entry, Format::kLps);
        record.similarity = nearest.similarity;
      }
    }
  } else if (format == Format::kWid) {
    uint64_t value;
    if (token.size() == 9 && token[0] != '0' && ParseUint(token, &value)) {
      if (const DictEntry *e = NearestByWid(static_cast<uint32_t>(value))) {
        record.decision = Decision::kNearestByWid;
        record.output = RenderEntry(*e, Format::kLps);
      }
    }
  }
  return record;
}

SequenceMR Interpreter::InterpretSequence(
    const SequenceMR &mr, Format format,
    std::vector<TraceRecord> *trace) const {
  SequenceMR out = mr;
  auto add = [&](TraceRecord record, int line) {
    record.line = line;
    if (trace != nullptr) trace->push_back(std::move(record));
  };
  for (size_t i = 0; i < out.lines.size(); ++i) {
    int lineno = static_cast<int>(i) + 1;
    Line &line = out.lines[i];
    TraceRecord head = InterpretToken(line.head, format);
    line.head = head.output;
    add(std::move(head), lineno);
    for (Edge &edge : line.edges) {
      if (!edge.label.empty()) {
        TraceRecord label = InterpretToken(edge.label, format);
        edge.label = label.output;
        add(std::move(label), lineno);
      }
      TraceRecord arg;
      arg.input = arg.output = edge.arg.text;
      add(std::move(arg), lineno);
    }
  }
  return out;
}

std::string TraceTsv(const std::vector<TraceRecord> &trace) {
  std::string out = "line\tinput\tdecision\toutput\tsimilarity\n";
  for (const TraceRecord &r : trace) {
    out += std::to_string(r.line) + '\t' + r.input + '\t' +
           DecisionName(r.decision) + '\t' + r.output + '\t' +
           (r.similarity ? FormatFixed(*r.similarity, 4) : "-") + '\n';
  }
  return out;
}

}  // namespace taxsem
