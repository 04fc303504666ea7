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

// DRS sequence notation. Each line starts with a head (a concept or a
// discourse relation) followed by edges. An edge is a label (role or
// operator) and an argument, or a bare argument on relation lines.
// Arguments are De Bruijn indices (-2, +1), scopes (<1, >1), quoted
// literals ("John") or constants (now).
//
//   male.n.02 Name "John"
//   time.n.08 EQU now
//   NEGATION <1
//   laugh.v.01 Agent -2 Time -1

#ifndef TAXSEM_SEQUENCE_H_
#define TAXSEM_SEQUENCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxsem/symbols.h"
#include "taxsem/util.h"

namespace taxsem {

enum class Format { kLps, kWid, kTax };

const char *FormatName(Format format);
std::optional<Format> FormatFromName(std::string_view name);

enum class FaultKind {
  kDanglingIndex,
  kCyclicGraph,
  kUnknownToken,
  kMalformedLine,
};

const char *FaultKindName(FaultKind kind);

struct Fault {
  FaultKind kind;
  // 1-based line within the block; 0 for block-level faults.
  int line = 0;
  std::string detail;

  std::string ToString() const;
};

// Error carrying a fault, thrown by parsing and conversion.
class SequenceError : public Error {
 public:
  explicit SequenceError(Fault fault)
      : Error(ErrorKind::kData, fault.ToString()), fault_(std::move(fault)) {}
  const Fault &fault() const { return fault_; }

 private:
  Fault fault_;
};

enum class ArgKind { kIndex, kScope, kLiteral, kConstant };

struct Argument {
  ArgKind kind = ArgKind::kConstant;
  // Signed offset for indices (-2, +1); for scopes, -k for >k and +k for <k.
  int offset = 0;
  // Token as written.
  std::string text;

  bool operator==(const Argument &other) const = default;
};

struct Edge {
  // Role or operator token; empty for bare arguments of relation lines.
  std::string label;
  Argument arg;

  bool operator==(const Edge &other) const = default;
};

struct Line {
  std::string head;
  // True if the head is a discourse relation.
  bool relation = false;
  std::vector<Edge> edges;

  bool operator==(const Line &other) const = default;
};

struct SequenceMR {
  std::vector<Line> lines;

  // One line per MR line, tokens separated by a single space.
  std::string Serialize() const;

  bool operator==(const SequenceMR &other) const = default;
};

struct ParseOptions {
  Format format = Format::kLps;
  // Label width of TAX concept codes. 0 accepts any width.
  int width = 0;
  int role_width = kRoleWidth;
};

// Token classes for a format. Concept tests are syntactic only; a token can
// be a well-formed concept that no dictionary knows.
bool IsConceptToken(std::string_view token, const ParseOptions &options);
bool IsRelationToken(std::string_view token, Format format);
bool IsRoleToken(std::string_view token, const ParseOptions &options);
bool IsOperatorToken(std::string_view token, Format format);

// Parses one MR. Blank lines are ignored. Throws SequenceError with a
// malformed_line fault on a token that fits no class of the format.
SequenceMR ParseSequence(std::string_view text, const ParseOptions &options);

// Splits a corpus into blank-line-separated blocks. Lines starting with '%'
// are comments and are dropped.
std::vector<std::string> SplitBlocks(std::string_view text);

// Splits a line into tokens; quoted literals may contain spaces.
std::vector<std::string> TokenizeLine(std::string_view line);

}  // namespace taxsem

#endif  // TAXSEM_SEQUENCE_H_
