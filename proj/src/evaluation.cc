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

#include "taxsem/evaluation.h"

#include <cstdio>
#include <cstdlib>
#include <tuple>

#include "taxsem/util.h"
#include "taxsem/wordnet.h"

namespace taxsem {

const char *CategoryName(Category category) {
  switch (category) {
    case Category::kNoun: return "noun";
    case Category::kVerb: return "verb";
    case Category::kAdjAdv: return "adj_adv";
  }
  return "?";
}

std::optional<Category> CategoryFromName(std::string_view name) {
  if (name == "noun") return Category::kNoun;
  if (name == "verb") return Category::kVerb;
  if (name == "adj_adv") return Category::kAdjAdv;
  return std::nullopt;
}

std::optional<Category> CategoryOf(std::string_view lps) {
  std::optional<LpsKey> key = LpsKey::Parse(lps);
  if (!key) return std::nullopt;
  switch (key->pos) {
    case Pos::kNoun: return Category::kNoun;
    case Pos::kVerb: return Category::kVerb;
    default: return Category::kAdjAdv;
  }
}

namespace {

std::string Cell(const std::vector<std::string_view> &row, int column) {
  if (column < 0 || column >= static_cast<int>(row.size())) return "";
  return std::string(Trim(row[column]));
}

const DictEntry *ResolveSynset(const ConceptDictionary &dict,
                               std::string_view lps) {
  const DictEntry *e = dict.FindByLps(lps);
  if (e == nullptr) e = dict.FindByLps(ToLower(lps));
  return e != nullptr && e->kind == EntryKind::kSynset ? e : nullptr;
}

}  // namespace

std::vector<ConceptPair> ParsePairs(std::string_view tsv) {
  std::vector<std::string_view> lines = SplitLines(tsv);
  std::vector<ConceptPair> pairs;
  if (lines.empty()) return pairs;
  std::map<std::string, int> columns;
  std::vector<std::string_view> header = Split(lines[0], '\t');
  for (size_t i = 0; i < header.size(); ++i) {
    columns[std::string(Trim(header[i]))] = i;
  }
  auto column = [&](const char *name) {
    auto it = columns.find(name);
    return it == columns.end() ? -1 : it->second;
  };
  int gold = column("gold"), predicted = column("predicted");
  if (gold < 0 || predicted < 0) {
    throw Error(ErrorKind::kData,
                "pairs file needs 'gold' and 'predicted' columns");
  }
  int category = column("category"), system = column("system");
  int sentence = column("sentence"), reference = column("reference");
  for (size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty() || lines[i][0] == '#') continue;
    std::vector<std::string_view> row = Split(lines[i], '\t');
    ConceptPair pair;
    pair.gold = Cell(row, gold);
    pair.predicted = Cell(row, predicted);
    if (pair.predicted == "-") pair.predicted.clear();
    std::string cat = Cell(row, category);
    std::optional<Category> c =
        cat.empty() ? CategoryOf(pair.gold) : CategoryFromName(cat);
    if (!c) {
      throw Error(ErrorKind::kData, "pairs line " + std::to_string(i + 1) +
                                        ": no category for " + pair.gold);
    }
    pair.category = *c;
    pair.system = Cell(row, system);
    pair.sentence = Cell(row, sentence);
    std::string ref = Cell(row, reference);
    if (!ref.empty()) pair.reference = std::strtod(ref.c_str(), nullptr);
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

ChallengeReport ScorePairs(const std::vector<ConceptPair> &pairs,
                           const ConceptDictionary &dict,
                           DepthConvention convention) {
  ChallengeReport report;
  std::map<std::tuple<std::string, Category>, std::pair<int, double>> sums;
  for (const ConceptPair &pair : pairs) {
    PairScore s;
    s.pair = pair;
    const DictEntry *gold = ResolveSynset(dict, pair.gold);
    if (gold == nullptr) s.warning = "unresolved gold " + pair.gold;
    if (!pair.predicted.empty()) {
      const DictEntry *pred = ResolveSynset(dict, pair.predicted);
      if (pred == nullptr) {
        if (!s.warning.empty()) s.warning += "; ";
        s.warning += "unresolved prediction " + pair.predicted;
      } else if (gold != nullptr) {
        s.score = WpsTax(*dict.TaxCodeOf(*gold), *dict.TaxCodeOf(*pred),
                         convention);
      }
    }
    auto &[count, total] = sums[{pair.system, pair.category}];
    count++;
    total += s.score;
    report.scores.push_back(std::move(s));
  }
  for (const auto &[key, value] : sums) {
    CategorySummary summary;
    summary.system = std::get<0>(key);
    summary.category = std::get<1>(key);
    summary.items = value.first;
    summary.mean = value.second / value.first;
    report.summary.push_back(summary);
  }
  return report;
}

std::string ChallengeReport::PairsTsv() const {
  std::string out =
      "index\tsystem\tcategory\tgold\tpredicted\tscore\treference\twarning\n";
  for (size_t i = 0; i < scores.size(); ++i) {
    const PairScore &s = scores[i];
    const ConceptPair &p = s.pair;
    out += std::to_string(i + 1) + '\t' + (p.system.empty() ? "-" : p.system) +
           '\t' + CategoryName(p.category) + '\t' + p.gold + '\t' +
           (p.predicted.empty() ? "-" : p.predicted) + '\t' +
           FormatFixed(s.score, 4) + '\t' +
           (p.reference ? FormatFixed(*p.reference, 2) : "-") + '\t' +
           (s.warning.empty() ? "-" : s.warning) + '\n';
  }
  return out;
}

std::string ChallengeReport::SummaryTsv() const {
  std::string out = "system\tcategory\titems\tmean\n";
  for (const CategorySummary &s : summary) {
    out += (s.system.empty() ? "-" : s.system) + '\t' +
           CategoryName(s.category) + '\t' + std::to_string(s.items) + '\t' +
           FormatFixed(s.mean, 3) + '\n';
  }
  return out;
}

ConceptPair AlignConcepts(const TripleGraph &gold, const TripleGraph &pred,
                          const std::vector<int> &mapping,
                          std::string_view target) {
  int node = -1;
  for (size_t g = 0; g < gold.concepts.size(); ++g) {
    if (gold.concepts[g] == target) {
      node = g;
      break;
    }
  }
  if (node < 0) {
    throw Error(ErrorKind::kData,
                "target " + std::string(target) + " not in gold graph");
  }
  ConceptPair pair;
  pair.gold = std::string(target);
  pair.category = CategoryOf(target).value_or(Category::kNoun);
  for (size_t p = 0; p < mapping.size() && p < pred.concepts.size(); ++p) {
    if (mapping[p] == node) pair.predicted = pred.concepts[p];
  }
  return pair;
}

std::vector<ReviewOverride> ParseReview(std::string_view tsv) {
  std::vector<ReviewOverride> review;
  int lineno = 0;
  for (std::string_view line : SplitLines(tsv)) {
    lineno++;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string_view> row = Split(line, '\t');
    uint64_t block;
    if (!ParseUint(Trim(row[0]), &block)) {
      if (lineno == 1) continue;  // header
      throw Error(ErrorKind::kData,
                  "review line " + std::to_string(lineno) + ": bad block");
    }
    if (row.size() < 3) {
      throw Error(ErrorKind::kData, "review line " + std::to_string(lineno) +
                                        ": expected 3 columns");
    }
    std::string predicted(Trim(row[2]));
    if (predicted == "-") predicted.clear();
    review.push_back({static_cast<int>(block), std::string(Trim(row[1])),
                      predicted});
  }
  return review;
}

void ApplyReview(const std::vector<ReviewOverride> &review,
                 std::vector<ConceptPair> *pairs) {
  for (const ReviewOverride &r : review) {
    if (r.block < 1 || r.block > static_cast<int>(pairs->size())) continue;
    ConceptPair &pair = (*pairs)[r.block - 1];
    if (pair.gold == r.gold) pair.predicted = r.predicted;
  }
}

std::string SenseHistogram::Tsv() const {
  std::string out = "sense\tcount\n";
  char buf[16];
  for (const auto &[sense, count] : counts) {
    snprintf(buf, sizeof(buf), "%02d", sense);
    out += std::string(buf) + '\t' + std::to_string(count) + '\n';
  }
  return out;
}

std::string SenseHistogram::Csv() const {
  std::string out = "sense,count\n";
  char buf[16];
  for (const auto &[sense, count] : counts) {
    snprintf(buf, sizeof(buf), "%02d", sense);
    out += std::string(buf) + ',' + std::to_string(count) + '\n';
  }
  return out;
}

SenseHistogram SenseDistribution(const std::vector<std::string> &blocks) {
  SenseHistogram hist;
  ParseOptions options;
  options.format = Format::kLps;
  for (const std::string &block : blocks) {
    hist.blocks++;
    SequenceMR mr;
    try {
      mr = ParseSequence(block, options);
    } catch (const SequenceError &) {
      hist.skipped_blocks++;
      continue;
    }
    for (const Line &line : mr.lines) {
      if (line.relation) continue;
      if (std::optional<LpsKey> key = LpsKey::Parse(line.head)) {
        hist.counts[key->sense]++;
      }
    }
  }
  return hist;
}

}  // namespace taxsem
