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

#include "taxsem/taxonomy.h"

#include <algorithm>
#include <deque>
#include <map>

#include "taxsem/util.h"

namespace taxsem {

namespace {

const SynsetId kEntity(Pos::kNoun, 1740);

char PrefixFor(const Synset &s) { return PosLetter(s.pos()); }

bool HasNegativePrefix(std::string_view lemma) {
  std::string lower = ToLower(lemma);
  for (const char *p : {"im", "in", "non", "un", "dis"}) {
    if (lower.rfind(p, 0) == 0) return true;
  }
  return false;
}

// Lemma of word `index` (1-based); the first member for semantic pointers.
const std::string &WordLemma(const Synset &s, int index) {
  if (index <= 0 || index > static_cast<int>(s.members.size())) {
    return s.members[0].lemma;
  }
  return s.members[index - 1].lemma;
}

// Candidate adjective lemmas for an adverb lemma without a pertainym.
std::vector<std::string> AdjectiveCandidates(const std::string &lemma) {
  std::vector<std::string> result = {lemma};
  auto ends_with = [&](const char *suffix) {
    std::string_view s(suffix);
    return lemma.size() > s.size() + 1 &&
           lemma.compare(lemma.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with("ically")) {
    result.push_back(lemma.substr(0, lemma.size() - 4));
  }
  if (ends_with("ily")) {
    result.push_back(lemma.substr(0, lemma.size() - 3) + "y");
  }
  if (ends_with("ably") || ends_with("ibly")) {
    result.push_back(lemma.substr(0, lemma.size() - 1) + "e");
  }
  if (ends_with("ly")) {
    result.push_back(lemma.substr(0, lemma.size() - 2));
  }
  return result;
}

}  // namespace

const char *TaxonomyPolicyId() {
  return "first-hypernym-file-order;labels-ascending-id;v1";
}

const SynsetPlacement &Taxonomy::Placement(SynsetId id) const {
  auto it = placement_.find(id.value());
  if (it == placement_.end()) {
    throw Error(ErrorKind::kNotFound, "no code for synset " + id.ToString());
  }
  return it->second;
}

TaxCode Taxonomy::Code(SynsetId id) const {
  const SynsetPlacement &p = Placement(id);
  TaxCode code;
  code.prefix = p.prefix;
  code.labels = nodes_[p.node].labels;
  code.polarity = p.polarity;
  code.width = width_;
  return code;
}

bool Taxonomy::InFallback(int node) const {
  while (node >= 0) {
    if (node == fallback_node_) return true;
    node = nodes_[node].parent;
  }
  return false;
}

TaxonomyBuilder::TaxonomyBuilder(const WordNetStore &store) : store_(store) {}

int TaxonomyBuilder::NewNode(int parent, SynsetId owner) {
  TaxonomyNode node;
  node.parent = parent;
  node.owner = owner;
  tax_.nodes_.push_back(std::move(node));
  pending_fallback_.push_back(false);
  return static_cast<int>(tax_.nodes_.size()) - 1;
}

void TaxonomyBuilder::Place(SynsetId id, int node, Polarity polarity) {
  const Synset &s = store_.Get(id);
  SynsetPlacement p;
  p.node = node;
  p.prefix = PrefixFor(s);
  p.polarity = polarity;
  tax_.placement_[id.value()] = p;
}

int TaxonomyBuilder::NodeOf(SynsetId id) const {
  auto it = tax_.placement_.find(id.value());
  return it == tax_.placement_.end() ? -1 : it->second.node;
}

bool TaxonomyBuilder::EndsInFallback(int node) const {
  int top = node;
  while (tax_.nodes_[top].parent >= 0) top = tax_.nodes_[top].parent;
  return pending_fallback_[top];
}

bool TaxonomyBuilder::Reaches(int from, int target) const {
  for (int n = from; n >= 0; n = tax_.nodes_[n].parent) {
    if (n == target) return true;
  }
  return false;
}

void TaxonomyBuilder::AddToFallback(int node, FallbackGroup group,
                                    const std::string &why) {
  pending_fallback_[node] = true;
  fallback_members_[group].push_back(node);
  tax_.warnings_.push_back(tax_.nodes_[node].owner.ToString() + " " +
                           store_.MemberLps(store_.Get(tax_.nodes_[node].owner),
                                            0) +
                           ": " + why + "; placed under fallback node");
}

void TaxonomyBuilder::AddNouns() {
  const Synset *entity = store_.Find(kEntity);
  if (entity == nullptr || !entity->hypernyms.empty()) {
    throw Error(ErrorKind::kBuild, "entity.n.01 missing or not a root");
  }
  int root = NewNode(-1, kEntity);
  Place(kEntity, root, Polarity::kNone);
  for (const Synset &s : store_.synsets()) {
    if (s.pos() != Pos::kNoun || s.id == kEntity) continue;
    Place(s.id, NewNode(-1, s.id), Polarity::kNone);
  }
  for (const Synset &s : store_.synsets()) {
    if (s.pos() != Pos::kNoun || s.id == kEntity) continue;
    if (s.hypernyms.empty()) {
      throw Error(ErrorKind::kBuild, "noun synset " + s.id.ToString() + " (" +
                                         store_.MemberLps(s, 0) +
                                         ") is unreachable from entity.n.01");
    }
    tax_.nodes_[NodeOf(s.id)].parent = NodeOf(s.hypernyms[0]);
  }
  // Every noun must reach the root without a cycle.
  std::vector<char> state(tax_.nodes_.size(), 0);  // 1 visiting, 2 done
  state[root] = 2;
  for (const Synset &s : store_.synsets()) {
    if (s.pos() != Pos::kNoun) continue;
    std::vector<int> path;
    int n = NodeOf(s.id);
    while (state[n] == 0) {
      state[n] = 1;
      path.push_back(n);
      n = tax_.nodes_[n].parent;
      if (n < 0) break;
    }
    if (n < 0 || state[n] == 1) {
      throw Error(ErrorKind::kBuild, "noun synset " + s.id.ToString() + " (" +
                                         store_.MemberLps(s, 0) +
                                         ") is unreachable from entity.n.01");
    }
    for (int p : path) state[p] = 2;
  }
}

void TaxonomyBuilder::AddVerbs() {
  for (const Synset &s : store_.synsets()) {
    if (s.pos() != Pos::kVerb) continue;
    Place(s.id, NewNode(-1, s.id), Polarity::kNone);
  }
  std::vector<const Synset *> roots;
  for (const Synset &s : store_.synsets()) {
    if (s.pos() != Pos::kVerb) continue;
    // WordNet 3.0 has one verb hypernym loop (restrain.v.01 and
    // inhibit.v.04); a hypernym that would close a loop is skipped.
    int node = NodeOf(s.id);
    for (SynsetId h : s.hypernyms) {
      if (Reaches(NodeOf(h), node)) continue;
      tax_.nodes_[node].parent = NodeOf(h);
      break;
    }
    if (tax_.nodes_[node].parent >= 0) continue;
    const Synset *noun = nullptr;
    for (const Pointer &p : s.pointers) {
      if (p.type == PointerType::kDerivation && p.target.pos() == Pos::kNoun) {
        noun = &store_.Get(p.target);
        break;
      }
    }
    if (noun != nullptr) {
      tax_.nodes_[NodeOf(s.id)].parent = NodeOf(noun->id);
    } else {
      roots.push_back(&s);
    }
  }
  // Roots without a related noun follow an entailed verb when that does not
  // close a cycle.
  for (const Synset *s : roots) {
    int node = NodeOf(s->id);
    for (SynsetId e : s->entailments) {
      if (e.pos() != Pos::kVerb) continue;
      int target = NodeOf(e);
      if (Reaches(target, node)) continue;
      tax_.nodes_[node].parent = target;
      break;
    }
    if (tax_.nodes_[node].parent < 0) {
      AddToFallback(node, kVerbGroup, "verb root without related noun");
    }
  }
}

const Synset *TaxonomyBuilder::AdverbTarget(const Synset &s) const {
  for (const Pointer &p : s.pointers) {
    if (p.type == PointerType::kPertainym && p.target.pos() == Pos::kAdj) {
      return &store_.Get(p.target);
    }
  }
  for (const Member &m : s.members) {
    for (const std::string &lemma : AdjectiveCandidates(ToLower(m.lemma))) {
      std::optional<SynsetId> id = store_.TryResolve(lemma + ".a.01");
      if (id) return &store_.Get(*id);
    }
  }
  return nullptr;
}

void TaxonomyBuilder::AddAdjectivesAndAdverbs() {
  // Anchor of an adjective head at a given priority level, or -1.
  auto anchor = [&](const Synset &s, int level) -> int {
    for (const Pointer &p : s.pointers) {
      Pos tp = p.target.pos();
      switch (level) {
        case 0:
          if (p.type == PointerType::kDerivation && tp == Pos::kNoun) {
            return NodeOf(p.target);
          }
          break;
        case 1:
          if (p.type == PointerType::kDerivation && tp == Pos::kVerb) {
            int n = NodeOf(p.target);
            if (n < 0 || EndsInFallback(n)) break;
            while (n >= 0 && tax_.nodes_[n].owner.pos() != Pos::kNoun) {
              n = tax_.nodes_[n].parent;
            }
            if (n >= 0) return n;
          }
          break;
        case 2:
          if (p.type == PointerType::kAttribute && tp == Pos::kNoun) {
            return NodeOf(p.target);
          }
          break;
        case 3:
          if (p.type == PointerType::kPertainym && tp == Pos::kNoun) {
            return NodeOf(p.target);
          }
          break;
      }
    }
    return -1;
  };

  // Pair heads through antonymy, in ascending id order.
  std::unordered_map<uint32_t, uint32_t> partner;
  std::unordered_map<uint32_t, Polarity> polarity;
  for (const Synset &s : store_.synsets()) {
    if (s.type != SynsetType::kAdjHead || partner.count(s.id.value())) {
      continue;
    }
    for (const Pointer &p : s.pointers) {
      if (p.type != PointerType::kAntonym || p.target == s.id) continue;
      const Synset &t = store_.Get(p.target);
      if (t.type != SynsetType::kAdjHead || partner.count(t.id.value())) {
        continue;
      }
      bool neg_s = HasNegativePrefix(WordLemma(s, p.source_word));
      bool neg_t = HasNegativePrefix(WordLemma(t, p.target_word));
      bool s_positive = (neg_s == neg_t) ? s.id < t.id : neg_t;
      partner[s.id.value()] = t.id.value();
      partner[t.id.value()] = s.id.value();
      polarity[s.id.value()] =
          s_positive ? Polarity::kPositive : Polarity::kNegative;
      polarity[t.id.value()] =
          s_positive ? Polarity::kNegative : Polarity::kPositive;
      break;
    }
  }

  // Heads. A pair is placed once, through its positive member.
  for (const Synset &s : store_.synsets()) {
    if (s.type != SynsetType::kAdjHead) continue;
    std::vector<const Synset *> members = {&s};
    Polarity pol = Polarity::kNeutral;
    auto pit = partner.find(s.id.value());
    if (pit != partner.end()) {
      if (polarity[s.id.value()] != Polarity::kPositive) continue;
      members.push_back(&store_.Get(SynsetId::FromValue(pit->second)));
      pol = Polarity::kPositive;
    }
    int parent = -1;
    for (int level = 0; level < 4 && parent < 0; ++level) {
      for (const Synset *m : members) {
        parent = anchor(*m, level);
        if (parent >= 0) break;
      }
    }
    int node = NewNode(parent, s.id);
    Place(s.id, node, pol);
    if (members.size() > 1) Place(members[1]->id, node, Polarity::kNegative);
    if (parent < 0) {
      AddToFallback(node, kAdjGroup, "adjective without related noun");
    }
  }

  // Satellites hang under their head.
  for (const Synset &s : store_.synsets()) {
    if (s.type != SynsetType::kAdjSatellite) continue;
    const Synset *head = nullptr;
    for (SynsetId h : s.similar_to) {
      const Synset &cand = store_.Get(h);
      if (cand.type == SynsetType::kAdjHead) {
        head = &cand;
        break;
      }
    }
    if (head == nullptr) {
      int node = NewNode(-1, s.id);
      Place(s.id, node, Polarity::kNeutral);
      AddToFallback(node, kAdjGroup, "satellite without head");
      continue;
    }
    const SynsetPlacement &hp = tax_.Placement(head->id);
    Polarity pol = hp.polarity;
    Place(s.id, NewNode(hp.node, s.id), pol);
  }

  // Adverbs share the node of their adjective. When several adverbs derive
  // from one adjective sense, the most frequent one (highest tag count, then
  // smallest id) shares the node and the others become its children.
  auto tag_sum = [](const Synset &s) {
    int n = 0;
    for (const Member &m : s.members) n += m.tag_count;
    return n;
  };
  std::map<std::pair<int, char>, const Synset *> alias;
  std::vector<std::pair<const Synset *, SynsetPlacement>> linked;
  for (const Synset &s : store_.synsets()) {
    if (s.pos() != Pos::kAdv) continue;
    const Synset *target = AdverbTarget(s);
    if (target == nullptr) {
      int node = NewNode(-1, s.id);
      Place(s.id, node, Polarity::kNeutral);
      AddToFallback(node, kAdvGroup, "adverb without adjective");
      continue;
    }
    SynsetPlacement tp = tax_.Placement(target->id);
    linked.emplace_back(&s, tp);
    auto key = std::make_pair(tp.node, static_cast<char>(tp.polarity));
    auto it = alias.find(key);
    if (it == alias.end() || tag_sum(s) > tag_sum(*it->second)) {
      alias[key] = &s;
    }
  }
  for (const auto &[s, tp] : linked) {
    auto key = std::make_pair(tp.node, static_cast<char>(tp.polarity));
    if (alias[key] == s) {
      Place(s->id, tp.node, tp.polarity);
    } else {
      Place(s->id, NewNode(tp.node, s->id), tp.polarity);
    }
  }
}

Taxonomy TaxonomyBuilder::Finish() {
  auto &nodes = tax_.nodes_;
  const std::u32string &alphabet = LabelAlphabet::Labels();

  // Fallback subtree: root -> '~' -> group -> chunk -> members.
  bool any = false;
  for (const auto &group : fallback_members_) any |= !group.empty();
  if (any) {
    int fallback = NewNode(0, SynsetId());
    nodes[fallback].fixed_label = kFallbackLabel;
    tax_.fallback_node_ = fallback;
    for (int g = 0; g < 3; ++g) {
      std::vector<int> members = fallback_members_[g];
      if (members.empty()) continue;
      int group = NewNode(fallback, SynsetId());
      nodes[group].fixed_label = alphabet[g];
      std::sort(members.begin(), members.end(), [&](int a, int b) {
        return nodes[a].owner < nodes[b].owner;
      });
      int chunk = -1;
      for (size_t i = 0; i < members.size(); ++i) {
        if (i % alphabet.size() == 0) {
          chunk = NewNode(group, SynsetId());
          nodes[chunk].fixed_label = alphabet[i / alphabet.size()];
        }
        nodes[members[i]].parent = chunk;
      }
    }
  }

  for (auto &n : nodes) n.children.clear();
  for (size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i].parent < 0) {
      throw Error(ErrorKind::kBuild,
                  "unattached node for synset " + nodes[i].owner.ToString());
    }
    nodes[nodes[i].parent].children.push_back(static_cast<int>(i));
  }

  // Labels in ascending owner id order.
  nodes[0].label = alphabet[0];
  for (auto &n : nodes) {
    std::vector<int> regular;
    for (int c : n.children) {
      if (nodes[c].fixed_label != 0) {
        nodes[c].label = nodes[c].fixed_label;
      } else {
        regular.push_back(c);
      }
    }
    if (regular.size() > alphabet.size()) {
      throw Error(ErrorKind::kBuild,
                  "node of " + n.owner.ToString() + " has " +
                      std::to_string(regular.size()) +
                      " children; label alphabet has " +
                      std::to_string(alphabet.size()) + " characters");
    }
    std::sort(regular.begin(), regular.end(), [&](int a, int b) {
      return nodes[a].owner < nodes[b].owner;
    });
    for (size_t i = 0; i < regular.size(); ++i) {
      nodes[regular[i]].label = alphabet[i];
    }
    std::sort(n.children.begin(), n.children.end());
  }

  // Label paths, top-down.
  std::deque<int> queue = {0};
  nodes[0].labels = std::u32string(1, nodes[0].label);
  size_t visited = 0;
  int width = 0;
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    visited++;
    width = std::max(width, static_cast<int>(nodes[n].labels.size()));
    for (int c : nodes[n].children) {
      nodes[c].labels = nodes[n].labels;
      nodes[c].labels.push_back(nodes[c].label);
      queue.push_back(c);
    }
  }
  if (visited != nodes.size()) {
    throw Error(ErrorKind::kBuild, "hierarchy contains a cycle");
  }
  tax_.width_ = width;

  tax_.synsets_.clear();
  for (const auto &[id, p] : tax_.placement_) {
    tax_.synsets_.push_back(SynsetId::FromValue(id));
  }
  std::sort(tax_.synsets_.begin(), tax_.synsets_.end());

  std::unordered_map<std::string, SynsetId> seen;
  seen.reserve(tax_.synsets_.size());
  for (SynsetId id : tax_.synsets_) {
    std::string code = tax_.Code(id).ToString();
    auto [it, inserted] = seen.emplace(code, id);
    if (!inserted) {
      throw Error(ErrorKind::kBuild, "code " + code + " assigned to both " +
                                         it->second.ToString() + " and " +
                                         id.ToString());
    }
  }
  return std::move(tax_);
}

Taxonomy TaxonomyBuilder::Build(const WordNetStore &store) {
  TaxonomyBuilder builder(store);
  builder.AddNouns();
  builder.AddVerbs();
  builder.AddAdjectivesAndAdverbs();
  return builder.Finish();
}

}  // namespace taxsem
