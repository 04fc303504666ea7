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

// Static code tables for thematic roles, operators and discourse relations.

#ifndef TAXSEM_SYMBOLS_H_
#define TAXSEM_SYMBOLS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace taxsem {

// Label width of role codes (t12000 is 't' plus five label positions).
constexpr int kRoleWidth = 5;

struct RoleInfo {
  std::string name;
  uint32_t wid;
  // 't' for thematic roles, 'i' for inverse roles.
  char prefix;
  // Stripped labels, e.g. "12" for Name.
  std::string labels;

  // Padded code, e.g. "t12000".
  std::string Code() const;
};

// An operator (edge label between two arguments) or a discourse relation
// (head of a line that scopes over boxes). Both map to one symbol.
struct SymbolInfo {
  std::string name;
  uint32_t wid;
  // UTF-8 encoding of a single code point.
  std::string symbol;
};

const std::vector<RoleInfo> &Roles();
const std::vector<SymbolInfo> &Operators();
const std::vector<SymbolInfo> &DiscourseRelations();

// Lookups by name, WID or symbol. Return nullptr if absent.
const RoleInfo *FindRoleByName(std::string_view name);
const SymbolInfo *FindOperator(std::string_view name_or_symbol);
const SymbolInfo *FindRelation(std::string_view name_or_symbol);

// Identifier of the role table, written to dictionary headers.
const char *RoleTableVersion();

}  // namespace taxsem

#endif  // TAXSEM_SYMBOLS_H_
