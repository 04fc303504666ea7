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

#include "taxsem/triples.h"

#include "taxsem/convert.h"
#include "taxsem/dictionary.h"
#include "taxsem/symbols.h"

namespace taxsem {

namespace {

bool IsTopLabel(std::string_view label) {
  const SymbolInfo *op = FindOperator(label);
  if (op != nullptr) return op->name == "TOP";
  for (const SymbolInfo &o : Operators()) {
    if (o.name == "TOP") return label == std::to_string(o.wid);
  }
  return false;
}

}  // namespace

std::string ValidationReport::FaultList() const {
  if (faults.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < faults.size(); ++i) {
    if (i > 0) s += ';';
    s += faults[i].ToString();
  }
  return s;
}

TripleGraph ResolveIndices(const SequenceMR &mr, ValidationReport *report) {
  TripleGraph graph;
  int n = mr.lines.size();
  // Concept lines in order, and for each line the number of concept lines
  // before it.
  std::vector<int> concept_lines;
  std::vector<int> before(n);
  for (int i = 0; i < n; ++i) {
    before[i] = concept_lines.size();
    if (!mr.lines[i].relation) concept_lines.push_back(i);
  }
  int num_concepts = concept_lines.size();
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < n; ++i) {
    const Line &line = mr.lines[i];
    graph.concepts.push_back(line.head);
    // Anchors for backward and forward offsets; a relation line sits between
    // concept positions before[i]-1 and before[i].
    int pos_back = before[i];
    int pos_fwd = line.relation ? before[i] - 1 : before[i];
    for (const Edge &edge : line.edges) {
      if (IsTopLabel(edge.label)) continue;
      std::string label = edge.label;
      if (label.empty()) {
        label = edge.arg.kind == ArgKind::kScope ? kScopeLabel : kArgLabel;
      }
      const Argument &arg = edge.arg;
      if (arg.kind == ArgKind::kLiteral || arg.kind == ArgKind::kConstant) {
        graph.edges.push_back(EdgeTriple{i, label, -1, arg.text});
        continue;
      }
      std::vector<int> targets;
      if (arg.kind == ArgKind::kIndex) {
        int t = arg.offset < 0 ? pos_back + arg.offset : pos_fwd + arg.offset;
        targets.push_back(t);
      } else if (arg.offset > 0) {
        for (int k = 1; k <= arg.offset; ++k) targets.push_back(pos_fwd + k);
      } else {
        for (int k = 1; k <= -arg.offset; ++k) targets.push_back(pos_back - k);
      }
      bool dangling = false;
      for (int t : targets) dangling |= t < 0 || t >= num_concepts;
      if (dangling) {
        report->Add(Fault{FaultKind::kDanglingIndex, i + 1,
                          label + " " + arg.text});
        continue;
      }
      for (int t : targets) {
        int node = concept_lines[t];
        graph.edges.push_back(EdgeTriple{i, label, node, ""});
        out[i].push_back(node);
      }
    }
  }
  // Cycle check over index and scope edges.
  std::vector<char> color(n, 0);
  bool cyclic = false;
  for (int start = 0; start < n && !cyclic; ++start) {
    if (color[start] != 0) continue;
    std::vector<std::pair<int, size_t>> stack = {{start, 0}};
    color[start] = 1;
    while (!stack.empty() && !cyclic) {
      auto &[node, next] = stack.back();
      if (next < out[node].size()) {
        int m = out[node][next++];
        if (color[m] == 1) {
          cyclic = true;
        } else if (color[m] == 0) {
          color[m] = 1;
          stack.push_back({m, 0});
        }
      } else {
        color[node] = 2;
        stack.pop_back();
      }
    }
  }
  if (cyclic) report->Add(Fault{FaultKind::kCyclicGraph, 0, ""});
  return graph;
}

ValidationReport Validate(const SequenceMR &mr) {
  ValidationReport report;
  ResolveIndices(mr, &report);
  return report;
}

ValidationReport ValidateBlock(std::string_view block,
                               const ParseOptions &options,
                               const ConceptDictionary *dict) {
  ValidationReport report;
  SequenceMR mr;
  try {
    mr = ParseSequence(block, options);
  } catch (const SequenceError &e) {
    report.Add(e.fault());
    return report;
  }
  if (dict != nullptr) {
    for (size_t i = 0; i < mr.lines.size(); ++i) {
      const Line &line = mr.lines[i];
      if (LookupToken(line.head, options.format, *dict) == nullptr) {
        report.Add(Fault{FaultKind::kUnknownToken, static_cast<int>(i) + 1,
                         line.head});
      }
      for (const Edge &e : line.edges) {
        if (e.label.empty()) continue;
        if (LookupToken(e.label, options.format, *dict) == nullptr) {
          report.Add(Fault{FaultKind::kUnknownToken, static_cast<int>(i) + 1,
                           e.label});
        }
      }
    }
  }
  ResolveIndices(mr, &report);
  return report;
}

double IllFormedRate(const std::vector<ValidationReport> &reports) {
  if (reports.empty()) return 0.0;
  size_t bad = 0;
  for (const ValidationReport &r : reports) bad += !r.well_formed;
  return static_cast<double>(bad) / reports.size();
}

}  // namespace taxsem
