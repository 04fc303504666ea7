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

// Triple graphs built from sequence MRs, and well-formedness checks.
//
// Every line becomes a node with one instance triple. Indices count concept
// lines only; relation lines are skipped when counting. A relation line
// sits between concept lines: its -1 is the concept line before it and its
// +1 the one after it. A scope <k (>k) links the line to each of the next
// (previous) k concept lines.

#ifndef TAXSEM_TRIPLES_H_
#define TAXSEM_TRIPLES_H_

#include <string>
#include <vector>

#include "taxsem/sequence.h"

namespace taxsem {

class ConceptDictionary;

// Edge labels for bare arguments of relation lines.
constexpr const char *kScopeLabel = "scope";
constexpr const char *kArgLabel = "arg";

struct EdgeTriple {
  int source = 0;
  std::string label;
  // Target node, or -1 when the target is the literal/constant below.
  int target = -1;
  std::string literal;

  bool operator==(const EdgeTriple &other) const = default;
};

struct TripleGraph {
  // Instance triple of node i: (i, instance, concepts[i]).
  std::vector<std::string> concepts;
  std::vector<EdgeTriple> edges;

  size_t TripleCount() const { return concepts.size() + edges.size(); }
};

struct ValidationReport {
  bool well_formed = true;
  std::vector<Fault> faults;

  void Add(Fault fault) {
    well_formed = false;
    faults.push_back(std::move(fault));
  }
  // Faults joined with ';', or "-" when well formed.
  std::string FaultList() const;
};

// Builds the triple graph. Dangling indices and cycles are added to
// `report`; a dangling edge is left out of the graph.
TripleGraph ResolveIndices(const SequenceMR &mr, ValidationReport *report);

// Structural checks of a parsed MR.
ValidationReport Validate(const SequenceMR &mr);

// Parses and checks one block. With a dictionary, concept, role, operator and
// relation tokens absent from it are unknown_token faults.
ValidationReport ValidateBlock(std::string_view block,
                               const ParseOptions &options,
                               const ConceptDictionary *dict = nullptr);

// Share of ill-formed reports, in [0, 1]. 0 for an empty list.
double IllFormedRate(const std::vector<ValidationReport> &reports);

}  // namespace taxsem

#endif  // TAXSEM_TRIPLES_H_
