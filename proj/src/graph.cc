// Copyright 2026 The Lexirank Authors.
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

#include "lexirank/graph.h"

#include <algorithm>
#include <set>
#include <string>

#include "lexirank/error.h"

namespace lexirank {

const char *GraphVariantName(GraphVariant variant) {
  switch (variant) {
    case GraphVariant::kG1Syn: return "G1SYN";
    case GraphVariant::kG1Ant: return "G1ANT";
    case GraphVariant::kG2: return "G2";
    case GraphVariant::kG3: return "G3";
    case GraphVariant::kG4: return "G4";
  }
  return "?";
}

std::optional<GraphVariant> GraphVariantFromName(std::string_view name) {
  for (GraphVariant variant :
       {GraphVariant::kG1Syn, GraphVariant::kG1Ant, GraphVariant::kG2,
        GraphVariant::kG3, GraphVariant::kG4}) {
    if (name == GraphVariantName(variant)) return variant;
  }
  return std::nullopt;
}

bool VariantIncludes(GraphVariant variant, RelationType type) {
  switch (variant) {
    case GraphVariant::kG1Syn:
      return type == RelationType::kSimilarTo ||
             type == RelationType::kSynonymVariant;
    case GraphVariant::kG1Ant:
      return type == RelationType::kAntonym;
    case GraphVariant::kG2:
      return true;
    case GraphVariant::kG3:
      return type != RelationType::kAntonym;
    case GraphVariant::kG4:
      return type != RelationType::kAntonym &&
             type != RelationType::kGlossLink;
  }
  return false;
}

NodeIndex::NodeIndex(std::vector<SynsetId> ids) : ids_(std::move(ids)) {
  if (!std::is_sorted(ids_.begin(), ids_.end())) {
    std::sort(ids_.begin(), ids_.end());
  }
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (SynsetId id : ids_) {
    hash = Fnv1a(id.ToString(), hash);
  }
  fingerprint_ = hash;
}

std::optional<size_t> NodeIndex::Find(SynsetId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<size_t>(it - ids_.begin());
}

std::shared_ptr<const NodeIndex> MakeNodeIndex(const LexicalKB &kb) {
  std::vector<SynsetId> ids;
  ids.reserve(kb.size());
  for (const Synset &synset : kb.synsets()) ids.push_back(synset.id);
  return std::make_shared<const NodeIndex>(std::move(ids));
}

PropagationGraph::PropagationGraph(
    GraphVariant variant, std::shared_ptr<const NodeIndex> nodes,
    std::vector<std::pair<uint32_t, uint32_t>> edges)
    : variant_(variant), nodes_(std::move(nodes)) {
  const size_t n = nodes_->size();
  for (auto &[a, b] : edges) {
    if (a == b) {
      throw Error(ErrorKind::kIntegrity, "graph",
                  "self loop on node " + std::to_string(a));
    }
    if (a >= n || b >= n) {
      throw Error(ErrorKind::kIntegrity, "graph", "edge endpoint out of range");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  row_start_.assign(n + 1, 0);
  for (const auto &[a, b] : edges) {
    ++row_start_[a + 1];
    ++row_start_[b + 1];
  }
  for (size_t i = 0; i < n; ++i) row_start_[i + 1] += row_start_[i];
  neighbors_.resize(2 * edges.size());
  std::vector<size_t> fill(row_start_.begin(), row_start_.end() - 1);
  for (const auto &[a, b] : edges) {
    neighbors_[fill[a]++] = b;
    neighbors_[fill[b]++] = a;
  }
  for (size_t i = 0; i < n; ++i) {
    std::sort(neighbors_.begin() + row_start_[i],
              neighbors_.begin() + row_start_[i + 1]);
  }
}

bool PropagationGraph::HasEdge(size_t a, size_t b) const {
  auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), static_cast<uint32_t>(b));
}

std::vector<std::pair<uint32_t, uint32_t>> PropagationGraph::Edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(num_edges());
  for (uint32_t a = 0; a < num_nodes(); ++a) {
    for (uint32_t b : neighbors(a)) {
      if (a < b) edges.emplace_back(a, b);
    }
  }
  return edges;
}

PropagationGraph BuildGraph(const LexicalKB &kb,
                            std::shared_ptr<const NodeIndex> nodes,
                            GraphVariant variant) {
  if (nodes->size() != kb.size()) {
    throw Error(ErrorKind::kIntegrity, "graph",
                "node index does not cover the knowledge base");
  }
  auto endpoints = [&](const Relation &relation) {
    auto a = nodes->Find(relation.source);
    auto b = nodes->Find(relation.target);
    if (!a || !b) {
      throw Error(ErrorKind::kIntegrity, "graph",
                  "relation endpoint missing from node index");
    }
    const auto x = static_cast<uint32_t>(*a);
    const auto y = static_cast<uint32_t>(*b);
    return std::make_pair(std::min(x, y), std::max(x, y));
  };
  // A pair that is also antonymous never enters the synonymy graph, which
  // keeps the two G1 graphs disjoint.
  std::set<std::pair<uint32_t, uint32_t>> antonyms;
  if (variant == GraphVariant::kG1Syn) {
    for (const Relation &relation : kb.relations()) {
      if (relation.type == RelationType::kAntonym) {
        antonyms.insert(endpoints(relation));
      }
    }
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (const Relation &relation : kb.relations()) {
    if (!VariantIncludes(variant, relation.type)) continue;
    auto edge = endpoints(relation);
    if (antonyms.count(edge)) continue;
    edges.push_back(edge);
  }
  PropagationGraph graph(variant, std::move(nodes), std::move(edges));
  graph.gloss_links_absent_ = variant == GraphVariant::kG2 &&
                              kb.CountRelations(RelationType::kGlossLink) == 0;
  return graph;
}

PropagationGraph BuildGraph(const LexicalKB &kb, GraphVariant variant) {
  return BuildGraph(kb, MakeNodeIndex(kb), variant);
}

}  // namespace lexirank
