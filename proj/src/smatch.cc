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

#include "taxsem/smatch.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

#include "taxsem/convert.h"
#include "taxsem/dictionary.h"
#include "taxsem/util.h"

namespace taxsem {

double ExactSimilarity::Concept(std::string_view a, std::string_view b) const {
  return a == b ? 1.0 : 0.0;
}

double ExactSimilarity::Label(std::string_view a, std::string_view b) const {
  return a == b ? 1.0 : 0.0;
}

TaxSimilarity::TaxSimilarity(const ConceptDictionary &dict, Format format,
                             DepthConvention convention)
    : dict_(dict), format_(format), convention_(convention) {}

const DictEntry *TaxSimilarity::EntryOf(std::string_view token) const {
  return LookupToken(token, format_, dict_);
}

std::optional<TaxCode> TaxSimilarity::CodeOf(std::string_view token) const {
  if (format_ == Format::kTax) {
    if (auto code = TaxCode::Parse(token, dict_.width())) return code;
    return TaxCode::Parse(token, dict_.role_width());
  }
  const DictEntry *entry = EntryOf(token);
  if (entry == nullptr) return std::nullopt;
  return dict_.TaxCodeOf(*entry);
}

double TaxSimilarity::Concept(std::string_view a, std::string_view b) const {
  if (a == b) return 1.0;
  std::optional<TaxCode> ca = CodeOf(a);
  std::optional<TaxCode> cb = CodeOf(b);
  if (!ca || !cb || ca->width != cb->width) return 0.0;
  return WpsTax(*ca, *cb, convention_);
}

double TaxSimilarity::Label(std::string_view a, std::string_view b) const {
  return Concept(a, b);
}

WordNetNounSimilarity::WordNetNounSimilarity(const ConceptDictionary &dict,
                                             Format format,
                                             const WordNetSimilarity &wordnet)
    : TaxSimilarity(dict, format), wordnet_(wordnet) {}

double WordNetNounSimilarity::Concept(std::string_view a,
                                      std::string_view b) const {
  if (a == b) return 1.0;
  const DictEntry *ea = EntryOf(a);
  const DictEntry *eb = EntryOf(b);
  auto is_noun = [](const DictEntry *e) {
    return e != nullptr && e->kind == EntryKind::kSynset &&
           SynsetId::FromValue(e->wid).pos() == Pos::kNoun;
  };
  if (is_noun(ea) && is_noun(eb)) {
    return wordnet_.Wup(SynsetId::FromValue(ea->wid),
                        SynsetId::FromValue(eb->wid));
  }
  return TaxSimilarity::Concept(a, b);
}

std::unique_ptr<TokenSimilarity> MakeSimilarity(
    const MatchConfig &config, const ConceptDictionary *dict, Format format,
    const WordNetSimilarity *wordnet) {
  if (config.mode == MatchMode::kHard) {
    return std::make_unique<ExactSimilarity>();
  }
  if (dict == nullptr) {
    throw Error(ErrorKind::kUsage, "soft matching needs a dictionary");
  }
  if (config.source == SimilaritySource::kWordNetNounOracle) {
    if (wordnet == nullptr) {
      throw Error(ErrorKind::kUsage, "the wordnet source needs WordNet data");
    }
    return std::make_unique<WordNetNounSimilarity>(*dict, format, *wordnet);
  }
  return std::make_unique<TaxSimilarity>(*dict, format);
}

namespace {

constexpr double kEpsilon = 1e-12;

// Maximum-weight one-to-one assignment between rows and columns.
double BestAssignment(const std::vector<std::vector<double>> &w) {
  if (w.empty() || w[0].empty()) return 0.0;
  size_t rows = w.size();
  size_t cols = w[0].size();
  if (rows == 1) return *std::max_element(w[0].begin(), w[0].end());
  if (std::min(rows, cols) <= 16) {
    // The longer side in order, the shorter one as a used-set bitmask.
    bool transpose = cols > rows;
    size_t r = transpose ? cols : rows;
    size_t c = transpose ? rows : cols;
    auto at = [&](size_t i, size_t j) { return transpose ? w[j][i] : w[i][j]; };
    std::vector<double> dp(size_t{1} << c, -1.0);
    dp[0] = 0.0;
    for (size_t i = 0; i < r; ++i) {
      std::vector<double> next = dp;  // row i left unmatched
      for (size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] < 0) continue;
        for (size_t j = 0; j < c; ++j) {
          if (mask & (size_t{1} << j)) continue;
          size_t m = mask | (size_t{1} << j);
          next[m] = std::max(next[m], dp[mask] + at(i, j));
        }
      }
      dp.swap(next);
    }
    return *std::max_element(dp.begin(), dp.end());
  }
  // Greedy for large groups.
  std::vector<std::tuple<double, size_t, size_t>> cells;
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      if (w[i][j] > 0) cells.emplace_back(-w[i][j], i, j);
    }
  }
  std::sort(cells.begin(), cells.end());
  std::vector<char> used_r(rows), used_c(cols);
  double total = 0;
  for (auto [neg, i, j] : cells) {
    if (used_r[i] || used_c[j]) continue;
    used_r[i] = used_c[j] = 1;
    total -= neg;
  }
  return total;
}

// Precomputed scores of one graph pair.
class Problem {
 public:
  Problem(const TripleGraph &gold, const TripleGraph &pred,
          const TokenSimilarity &sim)
      : np_(pred.concepts.size()), ng_(gold.concepts.size()) {
    // Literal edges per node.
    std::vector<std::vector<const EdgeTriple *>> pl(np_), gl(ng_);
    for (const EdgeTriple &e : pred.edges) {
      if (e.target < 0) pl[e.source].push_back(&e);
    }
    for (const EdgeTriple &e : gold.edges) {
      if (e.target < 0) gl[e.source].push_back(&e);
    }
    unary_.assign(np_, std::vector<double>(ng_, 0.0));
    for (int p = 0; p < np_; ++p) {
      for (int g = 0; g < ng_; ++g) {
        double s = sim.Concept(pred.concepts[p], gold.concepts[g]);
        if (!pl[p].empty() && !gl[g].empty()) {
          std::vector<std::vector<double>> w(
              pl[p].size(), std::vector<double>(gl[g].size(), 0.0));
          for (size_t i = 0; i < pl[p].size(); ++i) {
            for (size_t j = 0; j < gl[g].size(); ++j) {
              if (pl[p][i]->literal == gl[g][j]->literal) {
                w[i][j] = sim.Label(pl[p][i]->label, gl[g][j]->label);
              }
            }
          }
          s += BestAssignment(w);
        }
        unary_[p][g] = s;
      }
    }
    // Node-to-node edges grouped by ordered endpoint pair.
    std::map<std::pair<int, int>, int> pindex;
    std::vector<std::vector<std::string>> plabels, glabels;
    for (const EdgeTriple &e : pred.edges) {
      if (e.target < 0) continue;
      auto [it, fresh] = pindex.emplace(std::pair(e.source, e.target),
                                        static_cast<int>(groups_.size()));
      if (fresh) {
        groups_.push_back({e.source, e.target});
        plabels.emplace_back();
      }
      plabels[it->second].push_back(e.label);
    }
    gslot_.assign(static_cast<size_t>(ng_) * ng_, -1);
    for (const EdgeTriple &e : gold.edges) {
      if (e.target < 0) continue;
      int &slot = gslot_[e.source * ng_ + e.target];
      if (slot < 0) {
        slot = glabels.size();
        glabels.emplace_back();
      }
      glabels[slot].push_back(e.label);
    }
    pair_.assign(groups_.size(), std::vector<double>(glabels.size(), 0.0));
    for (size_t a = 0; a < groups_.size(); ++a) {
      for (size_t b = 0; b < glabels.size(); ++b) {
        std::vector<std::vector<double>> w(
            plabels[a].size(), std::vector<double>(glabels[b].size(), 0.0));
        for (size_t i = 0; i < plabels[a].size(); ++i) {
          for (size_t j = 0; j < glabels[b].size(); ++j) {
            w[i][j] = sim.Label(plabels[a][i], glabels[b][j]);
          }
        }
        pair_[a][b] = BestAssignment(w);
      }
    }
    incident_.resize(np_);
    for (size_t a = 0; a < groups_.size(); ++a) {
      incident_[groups_[a].first].push_back(a);
      if (groups_[a].second != groups_[a].first) {
        incident_[groups_[a].second].push_back(a);
      }
    }
    stamp_.assign(groups_.size(), 0);
  }

  int np() const { return np_; }
  int ng() const { return ng_; }
  double unary(int p, int g) const { return g < 0 ? 0.0 : unary_[p][g]; }

  double Total(const std::vector<int> &f) const {
    double total = 0;
    for (int p = 0; p < np_; ++p) total += unary(p, f[p]);
    for (size_t a = 0; a < groups_.size(); ++a) total += GroupScore(a, f);
    return total;
  }

  // Score of the terms that involve pred nodes p and q (q may be -1).
  double Local(const std::vector<int> &f, int p, int q) {
    double total = unary(p, f[p]);
    ++clock_;
    for (int a : incident_[p]) {
      stamp_[a] = clock_;
      total += GroupScore(a, f);
    }
    if (q >= 0) {
      total += unary(q, f[q]);
      for (int a : incident_[q]) {
        if (stamp_[a] != clock_) total += GroupScore(a, f);
      }
    }
    return total;
  }

 private:
  double GroupScore(size_t a, const std::vector<int> &f) const {
    int x = f[groups_[a].first];
    int y = f[groups_[a].second];
    if (x < 0 || y < 0) return 0.0;
    int slot = gslot_[x * ng_ + y];
    return slot < 0 ? 0.0 : pair_[a][slot];
  }

  int np_;
  int ng_;
  std::vector<std::vector<double>> unary_;
  std::vector<std::pair<int, int>> groups_;
  std::vector<int> gslot_;
  std::vector<std::vector<double>> pair_;
  std::vector<std::vector<int>> incident_;
  std::vector<uint64_t> stamp_;
  uint64_t clock_ = 0;
};

// Steepest-ascent hill climbing with remap and swap moves.
double Climb(Problem &problem, std::vector<int> &f) {
  int np = problem.np();
  int ng = problem.ng();
  std::vector<int> owner(ng, -1);
  for (int p = 0; p < np; ++p) {
    if (f[p] >= 0) owner[f[p]] = p;
  }
  while (true) {
    double best = kEpsilon;
    int best_p = -1, best_g = -2;
    for (int p = 0; p < np; ++p) {
      int old = f[p];
      for (int g = -1; g < ng; ++g) {
        if (g == old) continue;
        int q = g >= 0 ? owner[g] : -1;
        double before = problem.Local(f, p, q);
        f[p] = g;
        if (q >= 0) f[q] = old;
        double delta = problem.Local(f, p, q) - before;
        f[p] = old;
        if (q >= 0) f[q] = g;
        if (delta > best) {
          best = delta;
          best_p = p;
          best_g = g;
        }
      }
    }
    if (best_p < 0) break;
    int old = f[best_p];
    int q = best_g >= 0 ? owner[best_g] : -1;
    f[best_p] = best_g;
    if (best_g >= 0) owner[best_g] = best_p;
    if (q >= 0) {
      f[q] = old;
      if (old >= 0) owner[old] = q;
    } else if (old >= 0) {
      owner[old] = -1;
    }
  }
  return problem.Total(f);
}

std::vector<int> GreedyStart(const Problem &problem) {
  std::vector<std::tuple<double, int, int>> cells;
  for (int p = 0; p < problem.np(); ++p) {
    for (int g = 0; g < problem.ng(); ++g) {
      double s = problem.unary(p, g);
      if (s > 0) cells.emplace_back(-s, p, g);
    }
  }
  std::sort(cells.begin(), cells.end());
  std::vector<int> f(problem.np(), -1);
  std::vector<char> used(problem.ng(), 0);
  for (auto [neg, p, g] : cells) {
    if (f[p] >= 0 || used[g]) continue;
    f[p] = g;
    used[g] = 1;
  }
  return f;
}

// Random injection of a random subset of predicted nodes.
std::vector<int> RandomStart(const Problem &problem, std::mt19937_64 &rng) {
  auto shuffled = [&](int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(v[i], v[rng() % (i + 1)]);
    return v;
  };
  std::vector<int> gold = shuffled(problem.ng());
  std::vector<int> pred = shuffled(problem.np());
  std::vector<int> f(problem.np(), -1);
  for (int i = 0; i < problem.np() && i < problem.ng(); ++i) {
    f[pred[i]] = gold[i];
  }
  return f;
}

MatchResult Finish(const TripleGraph &gold, const TripleGraph &pred,
                   std::vector<int> mapping, double weight) {
  MatchResult r;
  r.mapping = std::move(mapping);
  r.matched_weight = weight;
  r.gold_triples = gold.TripleCount();
  r.pred_triples = pred.TripleCount();
  if (r.gold_triples == 0 && r.pred_triples == 0) {
    r.precision = r.recall = r.f1 = 1.0;
    return r;
  }
  if (r.pred_triples > 0) r.precision = weight / r.pred_triples;
  if (r.gold_triples > 0) r.recall = weight / r.gold_triples;
  if (r.precision + r.recall > 0) {
    r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

double F1(double w, size_t pred, size_t gold) {
  double p = pred > 0 ? w / pred : 0.0;
  double r = gold > 0 ? w / gold : 0.0;
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

}  // namespace

double MappingWeight(const TripleGraph &gold, const TripleGraph &pred,
                     const std::vector<int> &mapping,
                     const TokenSimilarity &sim) {
  Problem problem(gold, pred, sim);
  return problem.Total(mapping);
}

MatchResult Smatch(const TripleGraph &gold, const TripleGraph &pred,
                   const MatchConfig &config, const TokenSimilarity &sim) {
  if (config.restarts < 1) {
    throw Error(ErrorKind::kUsage, "restarts must be at least 1");
  }
  Problem problem(gold, pred, sim);
  std::mt19937_64 rng(config.seed);
  std::vector<int> best = GreedyStart(problem);
  double best_weight = Climb(problem, best);
  for (int i = 1; i < config.restarts; ++i) {
    std::vector<int> f = RandomStart(problem, rng);
    double w = Climb(problem, f);
    if (w > best_weight + kEpsilon) {
      best_weight = w;
      best = std::move(f);
    }
  }
  return Finish(gold, pred, std::move(best), best_weight);
}

MatchResult SmatchExhaustive(const TripleGraph &gold, const TripleGraph &pred,
                             const TokenSimilarity &sim) {
  Problem problem(gold, pred, sim);
  int np = problem.np();
  int ng = problem.ng();
  std::vector<int> f(np, -1), best(np, -1);
  std::vector<char> used(ng, 0);
  double best_weight = -1;
  auto visit = [&](auto &self, int p) -> void {
    if (p == np) {
      double w = problem.Total(f);
      if (w > best_weight + kEpsilon) {
        best_weight = w;
        best = f;
      }
      return;
    }
    f[p] = -1;
    self(self, p + 1);
    for (int g = 0; g < ng; ++g) {
      if (used[g]) continue;
      used[g] = 1;
      f[p] = g;
      self(self, p + 1);
      used[g] = 0;
    }
    f[p] = -1;
  };
  visit(visit, 0);
  return Finish(gold, pred, std::move(best), std::max(best_weight, 0.0));
}

std::string CorpusResult::ItemsTsv() const {
  std::string out =
      "index\twell_formed\tgold_triples\tpred_triples\tmatched\tprecision\t"
      "recall\tf1\tfaults\n";
  for (const CorpusItem &item : items) {
    const MatchResult &r = item.result;
    out += std::to_string(item.index) + '\t' +
           (item.well_formed ? "1" : "0") + '\t' +
           std::to_string(r.gold_triples) + '\t' +
           std::to_string(r.pred_triples) + '\t' +
           FormatFixed(r.matched_weight, 4) + '\t' +
           FormatFixed(r.precision, 4) + '\t' + FormatFixed(r.recall, 4) +
           '\t' + FormatFixed(r.f1, 4) + '\t' + item.faults + '\n';
  }
  return out;
}

CorpusResult CorpusSmatch(const std::vector<std::string> &gold_blocks,
                          const std::vector<std::string> &pred_blocks,
                          const ParseOptions &options,
                          const MatchConfig &config,
                          const TokenSimilarity &sim, int jobs) {
  if (gold_blocks.size() != pred_blocks.size()) {
    throw Error(ErrorKind::kData,
                "block count mismatch: gold " +
                    std::to_string(gold_blocks.size()) + ", predicted " +
                    std::to_string(pred_blocks.size()));
  }
  int n = gold_blocks.size();
  std::vector<TripleGraph> gold(n);
  for (int i = 0; i < n; ++i) {
    ValidationReport report;
    try {
      gold[i] = ResolveIndices(ParseSequence(gold_blocks[i], options), &report);
    } catch (const SequenceError &e) {
      report.Add(e.fault());
    }
    if (!report.well_formed) {
      throw Error(ErrorKind::kData, "gold block " + std::to_string(i + 1) +
                                        " is ill-formed: " +
                                        report.FaultList());
    }
  }
  CorpusResult result;
  result.items.resize(n);
  ParallelFor(n, jobs, [&](int i) {
    CorpusItem &item = result.items[i];
    item.index = i + 1;
    ValidationReport report;
    TripleGraph pred;
    try {
      pred = ResolveIndices(ParseSequence(pred_blocks[i], options), &report);
    } catch (const SequenceError &e) {
      report.Add(e.fault());
    }
    item.well_formed = report.well_formed;
    item.faults = report.FaultList();
    if (!report.well_formed) {
      item.result = Finish(gold[i], TripleGraph{}, {}, 0.0);
      item.result.precision = item.result.recall = item.result.f1 = 0.0;
      return;
    }
    MatchConfig block_config = config;
    block_config.seed = config.seed + i;
    item.result = Smatch(gold[i], pred, block_config, sim);
  });
  double matched = 0;
  size_t pred_total = 0, gold_total = 0;
  int ill_formed = 0;
  for (const CorpusItem &item : result.items) {
    matched += item.result.matched_weight;
    pred_total += item.result.pred_triples;
    gold_total += item.result.gold_triples;
    ill_formed += !item.well_formed;
  }
  if (n > 0) result.ifr = static_cast<double>(ill_formed) / n;
  if (pred_total == 0 && gold_total == 0) {
    double score = ill_formed == 0 ? 1.0 : 0.0;
    result.precision = result.recall = result.f1 = score;
  } else {
    result.precision = pred_total > 0 ? matched / pred_total : 0.0;
    result.recall = gold_total > 0 ? matched / gold_total : 0.0;
    result.f1 = F1(matched, pred_total, gold_total);
  }
  return result;
}

}  // namespace taxsem
