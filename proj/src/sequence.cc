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

#include "taxsem/sequence.h"

#include "taxsem/tax_code.h"
#include "taxsem/wordnet.h"

namespace taxsem {

const char *FormatName(Format format) {
  switch (format) {
    case Format::kLps: return "lps";
    case Format::kWid: return "wid";
    case Format::kTax: return "tax";
  }
  return "?";
}

std::optional<Format> FormatFromName(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "lps") return Format::kLps;
  if (lower == "wid") return Format::kWid;
  if (lower == "tax") return Format::kTax;
  return std::nullopt;
}

const char *FaultKindName(FaultKind kind) {
  switch (kind) {
    case FaultKind::kDanglingIndex: return "dangling_index";
    case FaultKind::kCyclicGraph: return "cyclic_graph";
    case FaultKind::kUnknownToken: return "unknown_token";
    case FaultKind::kMalformedLine: return "malformed_line";
  }
  return "?";
}

std::string Fault::ToString() const {
  std::string s = FaultKindName(kind);
  if (line > 0) s += "@" + std::to_string(line);
  if (!detail.empty()) s += ":" + detail;
  return s;
}

std::string SequenceMR::Serialize() const {
  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i].head;
    for (const Edge &e : lines[i].edges) {
      if (!e.label.empty()) {
        out += ' ';
        out += e.label;
      }
      out += ' ';
      out += e.arg.text;
    }
  }
  return out;
}

namespace {

// Nine digits whose first digit is `first` (any non-zero digit if 0).
bool IsWid(std::string_view token, char first) {
  uint64_t value;
  if (token.size() != 9 || !ParseUint(token, &value)) return false;
  if (first == 0) return token[0] != '0';
  return token[0] == first;
}

std::optional<TaxCode> ParseAnyWidth(std::string_view token, int width) {
  if (width > 0) return TaxCode::Parse(token, width);
  if (token.size() < 2) return std::nullopt;
  std::u32string rest = DecodeUtf8(token.substr(1));
  int w = rest.size();
  char32_t last = rest.back();
  if (last == '+' || last == '-' || last == '|') w--;
  if (w <= 0) return std::nullopt;
  return TaxCode::Parse(token, w);
}

// Index (+k/-k) or scope (<k/>k) with k >= 1.
std::optional<Argument> ParseStructuralArg(std::string_view token) {
  if (token.size() < 2) return std::nullopt;
  char c = token[0];
  if (c != '+' && c != '-' && c != '<' && c != '>') return std::nullopt;
  uint64_t k;
  if (!ParseUint(token.substr(1), &k) || k == 0 || k > 1000000) {
    return std::nullopt;
  }
  Argument arg;
  arg.text = std::string(token);
  int sign = (c == '+' || c == '<') ? 1 : -1;
  arg.offset = sign * static_cast<int>(k);
  arg.kind = (c == '+' || c == '-') ? ArgKind::kIndex : ArgKind::kScope;
  return arg;
}

}  // namespace

bool IsConceptToken(std::string_view token, const ParseOptions &options) {
  switch (options.format) {
    case Format::kLps:
      return LpsKey::Parse(token).has_value();
    case Format::kWid:
      return IsWid(token, 0) && token[0] >= '1' && token[0] <= '4';
    case Format::kTax: {
      std::optional<TaxCode> code = ParseAnyWidth(token, options.width);
      return code && IsConceptPrefix(code->prefix);
    }
  }
  return false;
}

bool IsRelationToken(std::string_view token, Format format) {
  const SymbolInfo *r = FindRelation(token);
  if (format == Format::kLps) return r != nullptr && r->name == token;
  if (r != nullptr && r->symbol == token) return true;
  return format == Format::kWid && IsWid(token, '6');
}

bool IsRoleToken(std::string_view token, const ParseOptions &options) {
  switch (options.format) {
    case Format::kLps:
      return FindRoleByName(token) != nullptr;
    case Format::kWid:
      return IsWid(token, '5');
    case Format::kTax: {
      std::optional<TaxCode> code = TaxCode::Parse(token, options.role_width);
      return code && IsRolePrefix(code->prefix);
    }
  }
  return false;
}

bool IsOperatorToken(std::string_view token, Format format) {
  const SymbolInfo *o = FindOperator(token);
  if (format == Format::kLps) return o != nullptr && o->name == token;
  if (o != nullptr && o->symbol == token) return true;
  return format == Format::kWid && IsWid(token, '7');
}

std::vector<std::string> TokenizeLine(std::string_view line) {
  std::vector<std::string> tokens;
  size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) i++;
    if (i >= line.size()) break;
    size_t start = i;
    if (line[i] == '"') {
      // A literal ends at a quote followed by whitespace or end of line.
      size_t j = i + 1;
      while (j < line.size()) {
        if (line[j] == '"' && (j + 1 == line.size() || space(line[j + 1]))) {
          break;
        }
        j++;
      }
      i = j < line.size() ? j + 1 : line.size();
    } else {
      while (i < line.size() && !space(line[i])) i++;
    }
    tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

SequenceMR ParseSequence(std::string_view text, const ParseOptions &options) {
  SequenceMR mr;
  int lineno = 0;
  for (std::string_view raw : SplitLines(text)) {
    std::vector<std::string> tokens = TokenizeLine(raw);
    if (tokens.empty()) continue;
    lineno++;
    auto fail = [&](const std::string &detail) {
      throw SequenceError(Fault{FaultKind::kMalformedLine, lineno, detail});
    };
    Line line;
    line.head = tokens[0];
    if (IsConceptToken(line.head, options)) {
      line.relation = false;
    } else if (IsRelationToken(line.head, options.format)) {
      line.relation = true;
    } else {
      fail("unrecognized head '" + line.head + "'");
    }
    size_t i = 1;
    while (i < tokens.size()) {
      const std::string &tok = tokens[i];
      if (std::optional<Argument> arg = ParseStructuralArg(tok)) {
        if (!line.relation) fail("argument '" + tok + "' without a label");
        line.edges.push_back(Edge{"", *arg});
        i++;
        continue;
      }
      bool is_label = IsRoleToken(tok, options) ||
                      IsOperatorToken(tok, options.format);
      if (!is_label) fail("unrecognized label '" + tok + "'");
      if (i + 1 >= tokens.size()) fail("label '" + tok + "' has no argument");
      const std::string &value = tokens[i + 1];
      Edge edge;
      edge.label = tok;
      if (std::optional<Argument> arg = ParseStructuralArg(value)) {
        edge.arg = *arg;
      } else if (value[0] == '"') {
        if (value.size() < 2 || value.back() != '"') {
          fail("unterminated literal " + value);
        }
        edge.arg.kind = ArgKind::kLiteral;
        edge.arg.text = value;
      } else {
        if (IsRoleToken(value, options) ||
            IsOperatorToken(value, options.format) ||
            IsRelationToken(value, options.format)) {
          fail("label '" + tok + "' has no argument");
        }
        edge.arg.kind = ArgKind::kConstant;
        edge.arg.text = value;
      }
      line.edges.push_back(std::move(edge));
      i += 2;
    }
    mr.lines.push_back(std::move(line));
  }
  return mr;
}

std::vector<std::string> SplitBlocks(std::string_view text) {
  std::vector<std::string> blocks;
  std::string current;
  for (std::string_view line : SplitLines(text)) {
    if (!line.empty() && line[0] == '%') continue;
    if (Trim(line).empty()) {
      if (!current.empty()) {
        blocks.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    if (!current.empty()) current += '\n';
    current += line;
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

}  // namespace taxsem
