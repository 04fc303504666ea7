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

#include "taxsem/symbols.h"

namespace taxsem {

std::string RoleInfo::Code() const {
  std::string code(1, prefix);
  code += labels;
  code.append(kRoleWidth - labels.size(), '0');
  return code;
}

const std::vector<RoleInfo> &Roles() {
  // Only Time, Agent and Name have published identifiers (500000003,
  // 500000004, 500000018). The remaining identifiers and all labels other
  // than t21, t221 and t12 are assigned here.
  static const std::vector<RoleInfo> *roles = new std::vector<RoleInfo>{
      {"Participant", 500000001, 't', "2"},
      {"Actor", 500000002, 't', "22"},
      {"Time", 500000003, 't', "21"},
      {"Agent", 500000004, 't', "221"},
      {"Causer", 500000005, 't', "222"},
      {"Co-Agent", 500000006, 't', "223"},
      {"Experiencer", 500000007, 't', "224"},
      {"Undergoer", 500000008, 't', "23"},
      {"Patient", 500000009, 't', "231"},
      {"Co-Patient", 500000010, 't', "232"},
      {"Theme", 500000011, 't', "233"},
      {"Co-Theme", 500000012, 't', "234"},
      {"Topic", 500000013, 't', "235"},
      {"Stimulus", 500000014, 't', "236"},
      {"Pivot", 500000015, 't', "237"},
      {"Relation", 500000016, 't', "1"},
      {"Attribute", 500000017, 't', "11"},
      {"Name", 500000018, 't', "12"},
      {"Role", 500000019, 't', "13"},
      {"Part", 500000020, 't', "14"},
      {"Sub", 500000021, 't', "15"},
      {"Owner", 500000022, 't', "16"},
      {"User", 500000023, 't', "17"},
      {"Creator", 500000024, 't', "18"},
      {"Content", 500000025, 't', "19"},
      {"Colour", 500000026, 't', "1A"},
      {"Quantity", 500000027, 't', "1B"},
      {"Unit", 500000028, 't', "1C"},
      {"Degree", 500000029, 't', "1D"},
      {"MadeOf", 500000030, 't', "1E"},
      {"Bearer", 500000031, 't', "1F"},
      {"Consumer", 500000032, 't', "1G"},
      {"Of", 500000033, 't', "1H"},
      {"Instance", 500000034, 't', "1I"},
      {"Place", 500000035, 't', "24"},
      {"Location", 500000036, 't', "241"},
      {"Source", 500000037, 't', "242"},
      {"Destination", 500000038, 't', "243"},
      {"Path", 500000039, 't', "244"},
      {"Goal", 500000040, 't', "245"},
      {"Beneficiary", 500000041, 't', "25"},
      {"Recipient", 500000042, 't', "251"},
      {"Instrument", 500000043, 't', "26"},
      {"Manner", 500000044, 't', "27"},
      {"Value", 500000045, 't', "28"},
      {"Asset", 500000046, 't', "281"},
      {"Material", 500000047, 't', "238"},
      {"Product", 500000048, 't', "239"},
      {"Result", 500000049, 't', "23A"},
      {"Duration", 500000050, 't', "211"},
      {"Frequency", 500000051, 't', "212"},
      {"Start", 500000052, 't', "213"},
      {"Finish", 500000053, 't', "214"},
      {"AttributeOf", 500000054, 'i', "11"},
      {"PartOf", 500000055, 'i', "14"},
      {"SubOf", 500000056, 'i', "15"},
      {"OwnerOf", 500000057, 'i', "16"},
      {"UserOf", 500000058, 'i', "17"},
      {"CreatorOf", 500000059, 'i', "18"},
      {"ContentOf", 500000060, 'i', "19"},
      {"ColourOf", 500000061, 'i', "1A"},
  };
  return *roles;
}

const std::vector<SymbolInfo> &Operators() {
  static const std::vector<SymbolInfo> *ops = new std::vector<SymbolInfo>{
      {"TPR", 700000001, "≺"},  // precedes
      {"TSU", 700000002, "≻"},  // succeeds
      {"TIN", 700000003, "⊏"},  // square subset
      {"TCT", 700000004, "⊐"},  // square superset
      {"TAB", 700000005, "⋈"},  // bowtie
      {"LES", 700000006, "<"},
      {"LEQ", 700000007, "≤"},
      {"TOP", 700000008, "⊤"},
      {"MOR", 700000010, ">"},
      {"EQU", 700000011, "="},
      {"ANA", 700000012, "≡"},
      {"APX", 700000013, "≈"},
      {"NEQ", 700000014, "≠"},
      {"SXP", 700000015, "≫"},
      {"SXN", 700000016, "≪"},
      {"SZN", 700000017, "⊻"},  // veebar
      {"SZP", 700000018, "⋎"},  // curly vee
  };
  return *ops;
}

const std::vector<SymbolInfo> &DiscourseRelations() {
  static const std::vector<SymbolInfo> *rels = new std::vector<SymbolInfo>{
      {"ALTERNATION", 600000001, "∨"},
      {"ATTRIBUTION", 600000002, "@"},
      {"CONDITION", 600000003, "→"},
      {"CONSEQUENCE", 600000004, "⇒"},
      {"CONTINUATION", 600000005, "↔"},
      {"CONTRAST", 600000006, "/"},
      {"EXPLANATION", 600000007, "∞"},
      {"NECESSITY", 600000008, "□"},
      {"NEGATION", 600000009, "¬"},
      {"POSSIBILITY", 600000010, "⋄"},
      {"PRECONDITION", 600000011, "←"},
      {"RESULT", 600000012, "∑"},
      {"SOURCE", 600000013, "↩"},
      {"CONJUNCTION", 600000014, "∧"},
      {"ELABORATION", 600000015, "⊃"},
      {"COMMENTARY", 600000016, "†"},
  };
  return *rels;
}

const RoleInfo *FindRoleByName(std::string_view name) {
  for (const RoleInfo &r : Roles()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

static const SymbolInfo *FindIn(const std::vector<SymbolInfo> &table,
                                std::string_view key) {
  for (const SymbolInfo &s : table) {
    if (s.name == key || s.symbol == key) return &s;
  }
  return nullptr;
}

const SymbolInfo *FindOperator(std::string_view name_or_symbol) {
  return FindIn(Operators(), name_or_symbol);
}

const SymbolInfo *FindRelation(std::string_view name_or_symbol) {
  return FindIn(DiscourseRelations(), name_or_symbol);
}

const char *RoleTableVersion() { return "roles-v1"; }

}  // namespace taxsem
