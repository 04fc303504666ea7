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

#include "taxsem/tax_code.h"

#include <string_view>

#include "taxsem/util.h"

namespace taxsem {

namespace {

// Characters that never appear as labels: quotes delimit literals, the
// polarity marks, the fallback label, and the ASCII operator and relation
// symbols.
constexpr std::string_view kReserved = "\"+-|~@/<=>";

std::u32string *BuildAlphabet(size_t *ascii_size) {
  auto *labels = new std::u32string;
  for (char32_t c = '1'; c <= '9'; ++c) labels->push_back(c);
  for (char32_t c = 'A'; c <= 'Z'; ++c) labels->push_back(c);
  for (char32_t c = 'a'; c <= 'z'; ++c) labels->push_back(c);
  for (char32_t c = '!'; c <= '~'; ++c) {
    bool alnum = (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') ||
                 (c >= 'a' && c <= 'z');
    if (alnum) continue;
    if (kReserved.find(static_cast<char>(c)) != std::string_view::npos) {
      continue;
    }
    labels->push_back(c);
  }
  *ascii_size = labels->size();
  // Latin Extended-A, Latin Extended-B, Latin Extended Additional.
  for (char32_t c = 0x0100; c <= 0x024F; ++c) labels->push_back(c);
  for (char32_t c = 0x1E00; c <= 0x1EFF; ++c) labels->push_back(c);
  // Cyrillic letters, skipping the thousands sign and combining marks.
  for (char32_t c = 0x0400; c <= 0x04FF; ++c) {
    if (c >= 0x0482 && c <= 0x0489) continue;
    labels->push_back(c);
  }
  return labels;
}

size_t ascii_size_ = 0;
const std::u32string &AlphabetInstance() {
  static const std::u32string *labels = BuildAlphabet(&ascii_size_);
  return *labels;
}

}  // namespace

const std::u32string &LabelAlphabet::Labels() { return AlphabetInstance(); }

size_t LabelAlphabet::AsciiSize() {
  AlphabetInstance();
  return ascii_size_;
}

bool LabelAlphabet::Contains(char32_t c) {
  return Labels().find(c) != std::u32string::npos;
}

bool IsConceptPrefix(char c) {
  return c == 'n' || c == 'v' || c == 'a' || c == 'r';
}

bool IsRolePrefix(char c) { return c == 't' || c == 'i'; }

std::u32string TaxCode::Normalized() const {
  std::u32string result = labels;
  if (polarity == Polarity::kPositive || polarity == Polarity::kNegative) {
    result.push_back(static_cast<char32_t>(polarity));
  }
  return result;
}

std::string TaxCode::ToString() const {
  std::string result(1, prefix);
  result += EncodeUtf8(labels);
  if (width > depth()) result.append(width - depth(), '0');
  if (polarity != Polarity::kNone) {
    result.push_back(static_cast<char>(polarity));
  }
  return result;
}

std::optional<TaxCode> TaxCode::Parse(std::string_view token, int width) {
  if (token.empty() || width <= 0) return std::nullopt;
  char prefix = token[0];
  if (!IsConceptPrefix(prefix) && !IsRolePrefix(prefix)) return std::nullopt;
  std::u32string rest = DecodeUtf8(token.substr(1));
  TaxCode code;
  code.prefix = prefix;
  code.width = width;
  if (!rest.empty()) {
    char32_t last = rest.back();
    if (last == '+' || last == '-' || last == '|') {
      if (prefix != 'a' && prefix != 'r') return std::nullopt;
      code.polarity = static_cast<Polarity>(last);
      rest.pop_back();
    }
  }
  if (static_cast<int>(rest.size()) != width) return std::nullopt;
  if (rest[0] == '0') return std::nullopt;
  size_t i = 0;
  while (i < rest.size() && rest[i] != '0') {
    char32_t c = rest[i];
    if (c == ' ' || c == '\t' || c == '"' || c == 0xFFFD || c == '+' ||
        c == '-' || c == '|') {
      return std::nullopt;
    }
    i++;
  }
  code.labels = rest.substr(0, i);
  for (; i < rest.size(); ++i) {
    if (rest[i] != '0') return std::nullopt;
  }
  return code;
}

}  // namespace taxsem
