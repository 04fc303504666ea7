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

#include "taxsem/similarity.h"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "taxsem/util.h"

namespace taxsem {

double WpsLabels(std::u32string_view a, std::u32string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  size_t n = std::min(a.size(), b.size());
  size_t lcp = 0;
  while (lcp < n && a[lcp] == b[lcp]) lcp++;
  return 2.0 * lcp / static_cast<double>(a.size() + b.size());
}

double WpsTax(const TaxCode &a, const TaxCode &b, DepthConvention convention) {
  if (a.width != b.width) {
    throw Error(ErrorKind::kData, "code width mismatch: " + a.ToString() +
                                      " vs " + b.ToString());
  }
  if (convention == DepthConvention::kLabelsOnly) {
    return WpsLabels(a.Normalized(), b.Normalized());
  }
  std::u32string pa(1, static_cast<char32_t>(a.prefix));
  std::u32string pb(1, static_cast<char32_t>(b.prefix));
  pa += a.Normalized();
  pb += b.Normalized();
  return WpsLabels(pa, pb);
}

uint64_t WidDistance(uint32_t a, uint32_t b) {
  return a > b ? static_cast<uint64_t>(a - b) : static_cast<uint64_t>(b - a);
}

WordNetSimilarity::WordNetSimilarity(const WordNetStore &store)
    : store_(store) {
  for (const Synset &s : store.synsets()) {
    if (s.pos() == Pos::kNoun) ids_.push_back(s.id);
  }
  std::unordered_map<uint32_t, int> index;
  for (size_t i = 0; i < ids_.size(); ++i) index[ids_[i].value()] = i;
  parents_.resize(ids_.size());
  names_.resize(ids_.size());
  for (size_t i = 0; i < ids_.size(); ++i) {
    const Synset &s = store.Get(ids_[i]);
    for (SynsetId h : s.hypernyms) parents_[i].push_back(index.at(h.value()));
    names_[i] = store.MemberLps(s, 0);
  }
  // Depths by memoized recursion; the noun graph is acyclic.
  min_depth_.assign(ids_.size(), -1);
  max_depth_.assign(ids_.size(), -1);
  std::vector<int> stack;
  for (size_t start = 0; start < ids_.size(); ++start) {
    if (min_depth_[start] >= 0) continue;
    stack.push_back(start);
    while (!stack.empty()) {
      int n = stack.back();
      bool ready = true;
      for (int p : parents_[n]) {
        if (min_depth_[p] < 0) {
          stack.push_back(p);
          ready = false;
        }
      }
      if (!ready) continue;
      stack.pop_back();
      if (min_depth_[n] >= 0) continue;
      int lo = 0, hi = 0;
      if (!parents_[n].empty()) {
        lo = 1 << 30;
        for (int p : parents_[n]) {
          lo = std::min(lo, min_depth_[p] + 1);
          hi = std::max(hi, max_depth_[p] + 1);
        }
      }
      min_depth_[n] = lo;
      max_depth_[n] = hi;
    }
  }
}

int WordNetSimilarity::IndexOf(SynsetId id) const {
  if (id.pos() != Pos::kNoun) {
    throw Error(ErrorKind::kData,
                "WordNet similarity is defined for nouns only: " +
                    id.ToString());
  }
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) {
    throw Error(ErrorKind::kNotFound, "unknown synset " + id.ToString());
  }
  return it - ids_.begin();
}

int WordNetSimilarity::MinDepth(SynsetId id) const {
  return min_depth_[IndexOf(id)];
}

int WordNetSimilarity::MaxDepth(SynsetId id) const {
  return max_depth_[IndexOf(id)];
}

std::vector<std::pair<int, int>> WordNetSimilarity::Ancestors(
    int index) const {
  std::unordered_map<int, int> dist;
  std::deque<int> queue = {index};
  dist[index] = 0;
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    for (int p : parents_[n]) {
      if (dist.emplace(p, dist[n] + 1).second) queue.push_back(p);
    }
  }
  std::vector<std::pair<int, int>> result(dist.begin(), dist.end());
  std::sort(result.begin(), result.end());
  return result;
}

double WordNetSimilarity::Wup(SynsetId a, SynsetId b) const {
  int ia = IndexOf(a);
  int ib = IndexOf(b);
  std::vector<std::pair<int, int>> da = Ancestors(ia);
  std::vector<std::pair<int, int>> db = Ancestors(ib);
  std::unordered_map<int, int> dbmap(db.begin(), db.end());
  std::vector<int> common;
  for (const auto &[n, d] : da) {
    if (dbmap.count(n)) common.push_back(n);
  }
  if (common.empty()) return 0.0;
  int best = -1;
  for (int n : common) best = std::max(best, min_depth_[n]);
  std::vector<int> lowest;
  for (int n : common) {
    if (min_depth_[n] == best) lowest.push_back(n);
  }
  int subsumer;
  if (std::find(lowest.begin(), lowest.end(), ia) != lowest.end()) {
    subsumer = ia;
  } else {
    subsumer = *std::min_element(lowest.begin(), lowest.end(),
                                 [&](int x, int y) {
                                   return names_[x] < names_[y];
                                 });
  }
  // Shortest path between each side and the subsumer through any common
  // ancestor.
  std::vector<std::pair<int, int>> ds = Ancestors(subsumer);
  auto shortest = [&](const std::vector<std::pair<int, int>> &dx) {
    std::unordered_map<int, int> xmap(dx.begin(), dx.end());
    int result = 1 << 30;
    for (const auto &[n, d] : ds) {
      auto it = xmap.find(n);
      if (it != xmap.end()) result = std::min(result, it->second + d);
    }
    return result;
  };
  int depth = max_depth_[subsumer] + 1;
  int len1 = shortest(da) + depth;
  int len2 = shortest(db) + depth;
  return 2.0 * depth / (len1 + len2);
}

}  // namespace taxsem
