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

#ifndef LEXIRANK_GRAPH_H_
#define LEXIRANK_GRAPH_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lexirank/lkb.h"

namespace lexirank {

// Relation projections of a knowledge base:
//   G1SYN  similar-to and synonym-variant edges
//   G1ANT  antonym edges
//   G2     every relation, gloss links included
//   G3     every relation except antonymy
//   G4     every relation except antonymy and gloss links
enum class GraphVariant { kG1Syn, kG1Ant, kG2, kG3, kG4 };

const char *GraphVariantName(GraphVariant variant);
std::optional<GraphVariant> GraphVariantFromName(std::string_view name);

bool VariantIncludes(GraphVariant variant, RelationType type);

// Dense index 0..N-1 over the synsets of a knowledge base, in (pos, offset)
// order. Graphs built from the same LexicalKB share one instance.
class NodeIndex {
 public:
  explicit NodeIndex(std::vector<SynsetId> ids);

  size_t size() const { return ids_.size(); }
  SynsetId id(size_t index) const { return ids_[index]; }
  const std::vector<SynsetId> &ids() const { return ids_; }
  std::optional<size_t> Find(SynsetId id) const;
  uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::vector<SynsetId> ids_;
  uint64_t fingerprint_ = 0;
};

std::shared_ptr<const NodeIndex> MakeNodeIndex(const LexicalKB &kb);

// Immutable undirected simple graph in compressed sparse row layout.
class PropagationGraph {
 public:
  // Edges are unordered pairs of dense indices; duplicates and orientation
  // are collapsed, self loops rejected.
  PropagationGraph(GraphVariant variant,
                   std::shared_ptr<const NodeIndex> nodes,
                   std::vector<std::pair<uint32_t, uint32_t>> edges);

  GraphVariant variant() const { return variant_; }
  const NodeIndex &nodes() const { return *nodes_; }
  const std::shared_ptr<const NodeIndex> &shared_nodes() const {
    return nodes_;
  }
  size_t num_nodes() const { return nodes_->size(); }
  size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const uint32_t> neighbors(size_t node) const {
    return {neighbors_.data() + row_start_[node],
            neighbors_.data() + row_start_[node + 1]};
  }
  size_t degree(size_t node) const {
    return row_start_[node + 1] - row_start_[node];
  }
  bool HasEdge(size_t a, size_t b) const;

  // Each undirected edge once, as (smaller, larger), sorted.
  std::vector<std::pair<uint32_t, uint32_t>> Edges() const;

  // Set when G2 was requested but the knowledge base has no gloss links.
  bool gloss_links_absent() const { return gloss_links_absent_; }

 private:
  friend PropagationGraph BuildGraph(const LexicalKB &,
                                     std::shared_ptr<const NodeIndex>,
                                     GraphVariant);

  GraphVariant variant_;
  std::shared_ptr<const NodeIndex> nodes_;
  std::vector<size_t> row_start_;
  std::vector<uint32_t> neighbors_;
  bool gloss_links_absent_ = false;
};

PropagationGraph BuildGraph(const LexicalKB &kb,
                            std::shared_ptr<const NodeIndex> nodes,
                            GraphVariant variant);

// Builds with a fresh node index.
PropagationGraph BuildGraph(const LexicalKB &kb, GraphVariant variant);

}  // namespace lexirank

#endif  // LEXIRANK_GRAPH_H_
