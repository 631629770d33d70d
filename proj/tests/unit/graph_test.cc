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
#include <random>
#include <sstream>

#include "doctest.h"
#include "lexirank/error.h"
#include "test_util.h"

namespace lexirank {
namespace {

using EdgeList = std::vector<std::pair<uint32_t, uint32_t>>;

LexicalKB FourSynsets(const std::string &edges) {
  std::istringstream in(
      "S\t00000001-a\ta\n"
      "S\t00000002-a\tb\n"
      "S\t00000003-a\tc\n"
      "S\t00000004-a\td\n" +
      edges);
  return ParseTsvGraph(in);
}

bool Subset(const EdgeList &small, const EdgeList &large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

TEST_CASE("variant filters on a single antonym edge") {
  LexicalKB kb = FourSynsets("E\t00000001-a\tantonym\t00000002-a\n");
  CHECK(BuildGraph(kb, GraphVariant::kG3).num_edges() == 0);
  PropagationGraph ant = BuildGraph(kb, GraphVariant::kG1Ant);
  CHECK(ant.num_edges() == 1);
  CHECK(ant.HasEdge(0, 1));
  CHECK(ant.HasEdge(1, 0));
  CHECK(ant.num_nodes() == 4);
}

TEST_CASE("G4 drops antonym and gloss edges") {
  LexicalKB kb = FourSynsets(
      "E\t00000001-a\tantonym\t00000002-a\n"
      "E\t00000002-a\tsimilar-to\t00000003-a\n"
      "E\t00000003-a\tgloss-link\t00000004-a\n");
  CHECK(BuildGraph(kb, GraphVariant::kG4).Edges() == EdgeList{{1, 2}});
  CHECK(BuildGraph(kb, GraphVariant::kG3).Edges() == EdgeList{{1, 2}, {2, 3}});
  CHECK(BuildGraph(kb, GraphVariant::kG2).Edges() ==
        EdgeList{{0, 1}, {1, 2}, {2, 3}});
  CHECK(BuildGraph(kb, GraphVariant::kG1Syn).Edges() == EdgeList{{1, 2}});
  CHECK_FALSE(BuildGraph(kb, GraphVariant::kG2).gloss_links_absent());
}

TEST_CASE("an antonymous pair stays out of the synonymy graph") {
  LexicalKB kb = FourSynsets(
      "E\t00000001-a\tsimilar-to\t00000002-a\n"
      "E\t00000002-a\tantonym\t00000001-a\n"
      "E\t00000003-a\tsimilar-to\t00000004-a\n");
  CHECK(BuildGraph(kb, GraphVariant::kG1Syn).Edges() == EdgeList{{2, 3}});
  CHECK(BuildGraph(kb, GraphVariant::kG1Ant).Edges() == EdgeList{{0, 1}});
  CHECK(BuildGraph(kb, GraphVariant::kG3).Edges() == EdgeList{{0, 1}, {2, 3}});
}

TEST_CASE("G2 without gloss links is flagged") {
  LexicalKB kb = FourSynsets("E\t00000001-a\tsimilar-to\t00000002-a\n");
  CHECK(BuildGraph(kb, GraphVariant::kG2).gloss_links_absent());
  CHECK_FALSE(BuildGraph(kb, GraphVariant::kG3).gloss_links_absent());
}

TEST_CASE("parallel relations collapse to one undirected edge") {
  LexicalKB kb = FourSynsets(
      "E\t00000001-a\tsimilar-to\t00000002-a\n"
      "E\t00000002-a\tsimilar-to\t00000001-a\n"
      "E\t00000001-a\talso-see\t00000002-a\n");
  PropagationGraph g = BuildGraph(kb, GraphVariant::kG2);
  CHECK(g.num_edges() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
}

TEST_CASE("self loops are rejected at construction") {
  auto nodes = std::make_shared<const NodeIndex>(
      std::vector<SynsetId>{{PartOfSpeech::kNoun, 1}, {PartOfSpeech::kNoun, 2}});
  CHECK_THROWS_AS(PropagationGraph(GraphVariant::kG2, nodes, {{1, 1}}), Error);
}

TEST_CASE("node index order is pos then offset") {
  LexicalKB kb = testing::LoadToyKb();
  auto nodes = MakeNodeIndex(kb);
  REQUIRE(nodes->size() == 8);
  CHECK(nodes->id(0).ToString() == "00000100-a");
  CHECK(nodes->id(7).ToString() == "00000010-n");
  CHECK(nodes->Find({PartOfSpeech::kNoun, 10}) == 7u);
  CHECK_FALSE(nodes->Find({PartOfSpeech::kVerb, 10}));
}

TEST_CASE("variant names") {
  for (GraphVariant v : {GraphVariant::kG1Syn, GraphVariant::kG1Ant,
                         GraphVariant::kG2, GraphVariant::kG3,
                         GraphVariant::kG4}) {
    CHECK(GraphVariantFromName(GraphVariantName(v)) == v);
  }
  CHECK_FALSE(GraphVariantFromName("G5"));
}

TEST_CASE("graph properties on random knowledge bases") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    LexicalKB kb = testing::RandomKb(rng, 2, 60);
    auto nodes = MakeNodeIndex(kb);
    PropagationGraph syn = BuildGraph(kb, nodes, GraphVariant::kG1Syn);
    PropagationGraph ant = BuildGraph(kb, nodes, GraphVariant::kG1Ant);
    PropagationGraph g2 = BuildGraph(kb, nodes, GraphVariant::kG2);
    PropagationGraph g3 = BuildGraph(kb, nodes, GraphVariant::kG3);
    PropagationGraph g4 = BuildGraph(kb, nodes, GraphVariant::kG4);

    CHECK(Subset(g4.Edges(), g3.Edges()));
    CHECK(Subset(g3.Edges(), g2.Edges()));
    CHECK(Subset(syn.Edges(), g2.Edges()));
    CHECK(Subset(ant.Edges(), g2.Edges()));
    for (auto edge : syn.Edges()) CHECK_FALSE(ant.HasEdge(edge.first, edge.second));

    for (const PropagationGraph *g : {&syn, &ant, &g2, &g3, &g4}) {
      CHECK(g->num_nodes() == kb.size());
      size_t degree_sum = 0;
      for (size_t i = 0; i < g->num_nodes(); ++i) {
        auto row = g->neighbors(i);
        degree_sum += g->degree(i);
        CHECK(row.size() == g->degree(i));
        for (uint32_t j : row) {
          CHECK(j != i);
          CHECK(g->HasEdge(j, i));
        }
        CHECK(std::adjacent_find(row.begin(), row.end()) == row.end());
      }
      CHECK(degree_sum == 2 * g->num_edges());
    }

    // Building again from scratch gives identical structure.
    PropagationGraph again = BuildGraph(kb, GraphVariant::kG3);
    CHECK(again.nodes().ids() == g3.nodes().ids());
    CHECK(again.Edges() == g3.Edges());
  }
}

}  // namespace
}  // namespace lexirank
