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

#include "support/fixtures.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <numeric>

#include "taxsem/util.h"

namespace taxsem::testing {

std::string WordNetDir() { return TAXSEM_TEST_WORDNET_DIR; }
std::string SourceDir() { return TAXSEM_TEST_SOURCE_DIR; }
std::string CliPath() { return TAXSEM_TEST_CLI; }

std::string SourcePath(const std::string &relative) {
  return SourceDir() + "/" + relative;
}

std::string ScratchDir(const std::string &name) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("taxsem_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

const WordNetStore &Store() {
  static const WordNetStore *store =
      new WordNetStore(WordNetStore::Load(WordNetDir()));
  return *store;
}

const Taxonomy &Tax() {
  static const Taxonomy *taxonomy =
      new Taxonomy(TaxonomyBuilder::Build(Store()));
  return *taxonomy;
}

const ConceptDictionary &Dict() {
  static const ConceptDictionary *dict =
      new ConceptDictionary(AssembleDictionary(Store(), Tax()));
  return *dict;
}

const WordNetSimilarity &WordNet() {
  static const WordNetSimilarity *sim = new WordNetSimilarity(Store());
  return *sim;
}

TaxCode CodeOf(const std::string &lps) {
  const DictEntry *e = Dict().FindByLps(lps);
  if (e == nullptr) throw Error(ErrorKind::kNotFound, "no entry " + lps);
  return *Dict().TaxCodeOf(*e);
}

TripleGraph RandomGraph(std::mt19937_64 &rng, int nodes,
                        const std::vector<std::string> &concepts,
                        const std::vector<std::string> &labels) {
  TripleGraph g;
  for (int i = 0; i < nodes; ++i) {
    g.concepts.push_back(concepts[rng() % concepts.size()]);
  }
  int edges = nodes == 0 ? 0 : rng() % (2 * nodes + 1);
  for (int i = 0; i < edges; ++i) {
    EdgeTriple e;
    e.source = rng() % nodes;
    e.label = labels[rng() % labels.size()];
    if (rng() % 5 == 0) {
      e.literal = rng() % 2 ? "\"John\"" : "now";
    } else {
      e.target = rng() % nodes;
    }
    g.edges.push_back(e);
  }
  return g;
}

namespace {

struct Pools {
  std::vector<std::string> synsets, roles, operators, relations;
};

const Pools &PoolsFor(const ConceptDictionary &dict) {
  static const Pools *pools = [&] {
    Pools *p = new Pools;
    for (const DictEntry &e : dict.entries()) {
      switch (e.kind) {
        case EntryKind::kSynset: p->synsets.push_back(e.name); break;
        case EntryKind::kRole: p->roles.push_back(e.name); break;
        case EntryKind::kOperator:
          if (e.name != "TOP") p->operators.push_back(e.name);
          break;
        case EntryKind::kRelation: p->relations.push_back(e.name); break;
      }
    }
    return p;
  }();
  return *pools;
}

}  // namespace

std::string SyntheticBlock(std::mt19937_64 &rng,
                           const ConceptDictionary &dict) {
  const Pools &pools = PoolsFor(dict);
  auto pick = [&](const std::vector<std::string> &v) -> const std::string & {
    return v[rng() % v.size()];
  };
  static const char *kConstants[] = {"now", "speaker", "hearer"};
  static const char *kNames[] = {"\"John\"", "\"Mary\"", "\"Paris\"",
                                 "\"1984\"", "\"Tom\""};
  int n = 1 + rng() % 8;
  // Edges run from higher to lower rank, which keeps the graph acyclic.
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::string text;
  for (int p = 0; p < n; ++p) {
    if (rng() % 6 == 0) {
      // A relation line scoping over following or preceding concepts.
      if (n - p > 0 && rng() % 2) {
        text += pick(pools.relations) + " <" +
                std::to_string(1 + rng() % (n - p)) + "\n";
      } else if (p > 0) {
        text += pick(pools.relations) + " >" +
                std::to_string(1 + rng() % p) + "\n";
      }
    }
    text += pick(pools.synsets);
    int edges = rng() % 4;
    for (int e = 0; e < edges; ++e) {
      bool op = rng() % 4 == 0;
      text += " " + (op ? pick(pools.operators) : pick(pools.roles)) + " ";
      std::vector<int> lower;
      for (int q = 0; q < n; ++q) {
        if (rank[q] < rank[p]) lower.push_back(q);
      }
      int kind = rng() % 4;
      if (kind == 0 || lower.empty()) {
        text += rng() % 2 ? kNames[rng() % 5] : kConstants[rng() % 3];
      } else {
        int q = lower[rng() % lower.size()];
        text += (q < p ? "-" : "+") + std::to_string(std::abs(q - p));
      }
    }
    text += "\n";
  }
  return text;
}

int Run(const std::string &command, std::string *out) {
  FILE *pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::string text;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) text.append(buf, n);
  int status = pclose(pipe);
  if (out != nullptr) *out = std::move(text);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace taxsem::testing
