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

// Process-wide WordNet, taxonomy and dictionary shared by tests, plus paths
// to test data and the CLI binary.

#ifndef TAXSEM_TESTS_SUPPORT_FIXTURES_H_
#define TAXSEM_TESTS_SUPPORT_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include "taxsem/dictionary.h"
#include "taxsem/similarity.h"
#include "taxsem/taxonomy.h"
#include "taxsem/triples.h"
#include "taxsem/wordnet.h"

namespace taxsem::testing {

std::string WordNetDir();
std::string SourceDir();
std::string CliPath();
// Absolute path of a file under the source tree.
std::string SourcePath(const std::string &relative);
// Fresh scratch directory under the system temp directory.
std::string ScratchDir(const std::string &name);

const WordNetStore &Store();
const Taxonomy &Tax();
const ConceptDictionary &Dict();
const WordNetSimilarity &WordNet();

// Dictionary code of an LPS key; fails the calling test if absent.
TaxCode CodeOf(const std::string &lps);

// Random graph with `nodes` nodes whose concepts, labels and literals are
// drawn from small vocabularies, so that mappings compete.
TripleGraph RandomGraph(std::mt19937_64 &rng, int nodes,
                        const std::vector<std::string> &concepts,
                        const std::vector<std::string> &labels);

// Well-formed LPS block in the style of the PMB: concept lines with role and
// operator edges (acyclic), literals, constants and discourse relation lines.
std::string SyntheticBlock(std::mt19937_64 &rng, const ConceptDictionary &dict);

// Runs a shell command, capturing stdout. Returns the exit status.
int Run(const std::string &command, std::string *out = nullptr);

}  // namespace taxsem::testing

#endif  // TAXSEM_TESTS_SUPPORT_FIXTURES_H_
