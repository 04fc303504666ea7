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

// Maps generated TAX or WID tokens back to LPS. A token found in the
// dictionary maps to its entry; a well-formed code absent from it maps to the
// most similar entry; anything else passes through unchanged.
//
// Nearest-code search is restricted to entries with the same prefix and code
// width (all entries of that width if the prefix has none). Ties go to the
// smaller WID.

#ifndef TAXSEM_INTERPRETER_H_
#define TAXSEM_INTERPRETER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taxsem/dictionary.h"
#include "taxsem/sequence.h"
#include "taxsem/tax_code.h"

namespace taxsem {

enum class Decision {
  kExactDictionary,
  kNearestByWps,
  kNearestByWid,
  kLiteralPassthrough,
};

const char *DecisionName(Decision decision);

struct TraceRecord {
  int line = 0;
  std::string input;
  Decision decision = Decision::kLiteralPassthrough;
  std::string output;
  std::optional<double> similarity;
};

struct Nearest {
  const DictEntry *entry = nullptr;
  double similarity = 0;
};

class Interpreter {
 public:
  explicit Interpreter(const ConceptDictionary &dict);

  // Interprets a head or label token written in `format` (kTax or kWid).
  TraceRecord InterpretToken(std::string_view token, Format format) const;

  // Token-wise interpretation into LPS. Arguments pass through; every token,
  // arguments included, gets one trace record.
  SequenceMR InterpretSequence(const SequenceMR &mr, Format format,
                               std::vector<TraceRecord> *trace) const;

  // Most similar entry to `code` by Wu-Palmer over normalized labels.
  Nearest NearestByWps(const TaxCode &code) const;
  // Reference implementation: scans every candidate.
  Nearest NearestByScan(const TaxCode &code) const;
  // Entry of the same leading digit with the closest WID.
  const DictEntry *NearestByWid(uint32_t wid) const;

 private:
  struct Key {
    std::u32string labels;
    uint32_t wid;
    const DictEntry *entry;
  };
  // Candidates sharing a prefix and width, sorted by labels, with a sparse
  // table of range minima over (label count, wid).
  struct Group {
    std::vector<Key> keys;
    std::vector<std::vector<uint64_t>> table;

    void Build();
    uint64_t RangeMin(size_t lo, size_t hi) const;
  };

  const Group *GroupFor(const TaxCode &code) const;

  const ConceptDictionary &dict_;
  std::map<std::pair<char, int>, Group> by_prefix_;
  std::map<int, Group> by_width_;
  std::map<char, std::vector<uint32_t>> wids_;
};

// Trace as TSV with a header line.
std::string TraceTsv(const std::vector<TraceRecord> &trace);

}  // namespace taxsem

#endif  // TAXSEM_INTERPRETER_H_
