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

// Token-wise conversion of sequence MRs between LPS, WID and TAX.
// Operators and relations are names in LPS and symbols in WID and TAX.

#ifndef TAXSEM_CONVERT_H_
#define TAXSEM_CONVERT_H_

#include <string>
#include <string_view>

#include "taxsem/dictionary.h"
#include "taxsem/sequence.h"

namespace taxsem {

// Dictionary entry for a head or label token written in `format`.
const DictEntry *LookupToken(std::string_view token, Format format,
                             const ConceptDictionary &dict);

// Token of an entry in `format`.
std::string RenderEntry(const DictEntry &entry, Format format);

// Parse options matching a dictionary's code widths.
ParseOptions OptionsFor(Format format, const ConceptDictionary &dict);

// Replaces every head and label token; arguments are kept. Throws
// SequenceError with an unknown_token fault for a token missing from the
// dictionary.
SequenceMR Convert(const SequenceMR &mr, Format from, Format to,
                   const ConceptDictionary &dict);

}  // namespace taxsem

#endif  // TAXSEM_CONVERT_H_
