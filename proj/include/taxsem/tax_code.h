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

// Fixed-width taxonomical codes: a POS prefix, one label character per level
// of the hierarchy, trailing '0' padding and an optional polarity mark.

#ifndef TAXSEM_TAX_CODE_H_
#define TAXSEM_TAX_CODE_H_

#include <optional>
#include <string>
#include <string_view>

namespace taxsem {

enum class Polarity : char {
  kNone = 0,
  kPositive = '+',
  kNegative = '-',
  kNeutral = '|',
};

// Label characters in assignment order. The first 83 are ASCII; the rest are
// letters from the Latin extension and Cyrillic blocks, used only by nodes
// whose fan-out exceeds the ASCII set.
class LabelAlphabet {
 public:
  static const std::u32string &Labels();
  static size_t Size() { return Labels().size(); }
  static char32_t At(size_t i) { return Labels()[i]; }
  static bool Contains(char32_t c);
  static size_t AsciiSize();
};

// Label reserved for the synthetic node that holds unattachable synsets.
constexpr char32_t kFallbackLabel = U'~';

bool IsConceptPrefix(char c);  // n v a r
bool IsRolePrefix(char c);     // t i

struct TaxCode {
  char prefix = 'n';
  // Labels with the '0' padding stripped.
  std::u32string labels;
  Polarity polarity = Polarity::kNone;
  // Number of label positions including padding.
  int width = 0;

  int depth() const { return static_cast<int>(labels.size()); }

  // Labels followed by the polarity mark when it is '+' or '-'. This is the
  // string compared by Wu-Palmer similarity.
  std::u32string Normalized() const;

  // Padded UTF-8 rendering, e.g. "n1000" or "a1133931100+".
  std::string ToString() const;

  // Parses a padded code of the given label width. Returns nullopt unless
  // the token has a valid prefix, exactly `width` label positions, a non-pad
  // first label, only padding after the first '0', and a polarity mark only
  // on a/r codes.
  static std::optional<TaxCode> Parse(std::string_view token, int width);

  bool operator==(const TaxCode &other) const = default;
};

}  // namespace taxsem

#endif  // TAXSEM_TAX_CODE_H_
