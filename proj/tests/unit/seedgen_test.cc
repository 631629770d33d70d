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

#include "lexirank/seedgen.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lexirank/error.h"
#include "test_util.h"

namespace lexirank {
namespace {

SynsetId Adj(uint32_t offset) { return {PartOfSpeech::kAdjective, offset}; }

LexicalKB FromText(const std::string &text) {
  std::istringstream in(text);
  return ParseTsvGraph(in);
}

TEST_CASE("AG expansion on the toy knowledge base") {
  LexicalKB kb = testing::LoadToyKb();

  SeedSet s0 = AgSeeds(kb, 0);
  CHECK(s0.positive == std::set<SynsetId>{Adj(100)});
  CHECK(s0.negative == std::set<SynsetId>{Adj(200)});

  // quality is reached from good and bad at the same depth and dropped.
  SeedSet s1 = AgSeeds(kb, 1);
  CHECK(s1.positive == std::set<SynsetId>{Adj(100), Adj(300)});
  CHECK(s1.negative == std::set<SynsetId>{Adj(200), Adj(500)});
  CHECK(s1.conflicts_removed == 1);

  SeedSet s2 = AgSeeds(kb, 2);
  CHECK(s2.positive == std::set<SynsetId>{Adj(100), Adj(300), Adj(400)});
  CHECK(s2.negative == std::set<SynsetId>{Adj(200), Adj(500), Adj(600)});

  // decent is reached from fine (similar) and from evil (antonym): both pos.
  SeedSet s3 = AgSeeds(kb, 3);
  CHECK(s3.positive ==
        std::set<SynsetId>{Adj(100), Adj(300), Adj(400), Adj(700)});
  CHECK(s3.negative == s2.negative);
  CHECK_FALSE(s3.fixed_point_at);

  SeedSet s6 = AgSeeds(kb, 6);
  CHECK(s6.positive == s3.positive);
  CHECK(s6.negative == s3.negative);
  CHECK(s6.fixed_point_at == 3);
}

TEST_CASE("AG antonym neighbor takes the flipped polarity") {
  LexicalKB kb = FromText(
      "S\t00000001-n\tquality\n"
      "S\t00000002-a\tgood\n"
      "S\t00000003-a\tbad\n"
      "S\t00000004-a\ty\n"
      "E\t00000001-n\tattribute\t00000002-a\n"
      "E\t00000001-n\tattribute\t00000003-a\n"
      "E\t00000002-a\tantonym\t00000004-a\n");
  SeedSet seeds = AgSeeds(kb, 1);
  CHECK(seeds.negative.count(Adj(4)));
  CHECK_FALSE(seeds.positive.count(Adj(4)));
}

TEST_CASE("AG needs the quality synsets") {
  LexicalKB kb = FromText("S\t00000002-a\tgood\nS\t00000003-a\tbad\n");
  try {
    AgSeeds(kb, 0);
    FAIL("expected an unsupported-KB error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kUnsupported);
  }
  CHECK_THROWS_AS(AgSeeds(testing::LoadToyKb(), 16), Error);
  CHECK_THROWS_AS(AgSeeds(testing::LoadToyKb(), -1), Error);
}

TEST_CASE("TL antonym then similar-to") {
  LexicalKB kb = FromText(
      "S\t00000001-a\tp\n"
      "S\t00000002-a\tq\n"
      "S\t00000003-a\tr\n"
      "E\t00000001-a\tantonym\t00000002-a\n"
      "E\t00000002-a\tsimilar-to\t00000003-a\n");
  std::vector<SeedWord> words = {{"p", PartOfSpeech::kAdjective,
                                  Polarity::kPositive}};
  SeedSet seeds = TlSeeds(kb, 2, words);
  CHECK(seeds.positive == std::set<SynsetId>{Adj(1)});
  CHECK(seeds.negative == std::set<SynsetId>{Adj(2), Adj(3)});
  CHECK(seeds.method == SeedMethod::kTL);
}

TEST_CASE("TL with no expansion edges is a fixed point") {
  LexicalKB kb = FromText(
      "S\t00000001-a\tp\n"
      "S\t00000002-a\tn\n"
      "S\t00000003-n\tthing\n"
      "E\t00000001-a\thypernym\t00000003-n\n");
  std::vector<SeedWord> words = {
      {"p", PartOfSpeech::kAdjective, Polarity::kPositive},
      {"n", PartOfSpeech::kAdjective, Polarity::kNegative}};
  SeedSet base = TlSeeds(kb, 0, words);
  for (int k = 1; k <= 5; ++k) {
    SeedSet seeds = TlSeeds(kb, k, words);
    CHECK(seeds.positive == base.positive);
    CHECK(seeds.negative == base.negative);
  }
}

TEST_CASE("TL unresolved seed lemma") {
  LexicalKB kb = testing::LoadToyKb();
  std::vector<SeedWord> words = {
      {"good", PartOfSpeech::kAdjective, Polarity::kPositive},
      {"dreadful", PartOfSpeech::kAdjective, Polarity::kNegative}};
  try {
    TlSeeds(kb, 0, words);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("dreadful") != std::string::npos);
  }
  SeedSet seeds = TlSeeds(kb, 0, words, ConflictPolicy::kDrop, true);
  CHECK(seeds.skipped_lemmas == std::vector<std::string>{"dreadful#a"});
  CHECK(seeds.positive == std::set<SynsetId>{Adj(100)});
}

TEST_CASE("resolve conflicts") {
  const SynsetId a = Adj(1), b = Adj(2), c = Adj(3);
  SUBCASE("drop removes shared synsets") {
    SeedSet s = ResolveConflicts({{a, 0}, {b, 0}}, {{b, 0}, {c, 0}},
                                 ConflictPolicy::kDrop);
    CHECK(s.positive == std::set<SynsetId>{a});
    CHECK(s.negative == std::set<SynsetId>{c});
    CHECK(s.conflicts_removed == 1);
  }
  SUBCASE("first-wins keeps the shallower polarity") {
    SeedSet s = ResolveConflicts({{b, 1}}, {{b, 2}}, ConflictPolicy::kFirstWins);
    CHECK(s.positive == std::set<SynsetId>{b});
    CHECK(s.negative.empty());
  }
  SUBCASE("first-wins drops ties") {
    SeedSet s = ResolveConflicts({{b, 1}}, {{b, 1}}, ConflictPolicy::kFirstWins);
    CHECK(s.positive.empty());
    CHECK(s.negative.empty());
    CHECK(s.conflicts_removed == 1);
  }
}

TEST_CASE("seed files round trip") {
  SeedSet seeds = AgSeeds(testing::LoadToyKb(), 2);
  std::ostringstream out;
  WriteSeedSet(seeds, out);
  std::istringstream in(out.str());
  SeedSet again = ReadSeedSet(in);
  CHECK(again.positive == seeds.positive);
  CHECK(again.negative == seeds.negative);
  CHECK(again.method == seeds.method);
  CHECK(again.iteration == 2);
  CHECK(again.policy == seeds.policy);
  CHECK(again.relations == seeds.relations);

  std::istringstream words("# comment\ngood#a pos\nbad\tneg\nrun#v neg\n");
  auto parsed = ReadSeedWords(words);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[1].pos == PartOfSpeech::kAdjective);
  CHECK(parsed[2].pos == PartOfSpeech::kVerb);
  CHECK(parsed[2].polarity == Polarity::kNegative);
  std::istringstream bad("good maybe\n");
  CHECK_THROWS_AS(ReadSeedWords(bad), Error);
}

TEST_CASE("default seed lists") {
  auto words = DefaultTlSeedWords();
  CHECK(words.size() == 14);
  CHECK(std::count_if(words.begin(), words.end(), [](const SeedWord &w) {
          return w.polarity == Polarity::kPositive;
        }) == 7);
  auto ag = DefaultAgRelations();
  CHECK(std::find(ag.begin(), ag.end(), RelationType::kAttribute) != ag.end());
  CHECK(DefaultTlRelations().size() == 5);
}

std::set<SynsetId> RandomSubset(std::mt19937_64 &rng, const LexicalKB &kb,
                                double p) {
  std::bernoulli_distribution pick(p);
  std::set<SynsetId> out;
  for (const Synset &s : kb.synsets()) {
    if (pick(rng)) out.insert(s.id);
  }
  return out;
}

std::set<SynsetId> Keys(const ReachDepths &depths) {
  std::set<SynsetId> keys;
  for (const auto &[id, depth] : depths) keys.insert(id);
  return keys;
}

TEST_CASE("expansion properties on random knowledge bases") {
  std::mt19937_64 rng(5);
  const auto relations = DefaultAgRelations();
  for (int trial = 0; trial < 40; ++trial) {
    LexicalKB kb = testing::RandomKb(rng, 3, 50);
    ExpansionGraph graph = MakeExpansionGraph(kb, relations);
    std::set<SynsetId> pos = RandomSubset(rng, kb, 0.1);
    std::set<SynsetId> neg = RandomSubset(rng, kb, 0.1);
    for (SynsetId id : pos) neg.erase(id);

    // Monotone growth of the reached set.
    std::set<SynsetId> previous;
    for (int k = 0; k <= 6; ++k) {
      RawExpansion raw = Expand(kb, graph, pos, neg, k);
      std::set<SynsetId> reached = Keys(raw.positive);
      auto negatives = Keys(raw.negative);
      reached.insert(negatives.begin(), negatives.end());
      CHECK(std::includes(reached.begin(), reached.end(), previous.begin(),
                          previous.end()));
      previous = reached;
    }

    RawExpansion raw = Expand(kb, graph, pos, neg, 4);
    RawExpansion mirrored = Expand(kb, graph, neg, pos, 4);
    CHECK(mirrored.positive == raw.negative);
    CHECK(mirrored.negative == raw.positive);

    // Shuffled adjacency order changes nothing under either policy.
    ExpansionGraph shuffled = graph;
    for (auto &links : shuffled) std::shuffle(links.begin(), links.end(), rng);
    RawExpansion again = Expand(kb, shuffled, pos, neg, 4);
    CHECK(again.positive == raw.positive);
    CHECK(again.negative == raw.negative);
    for (ConflictPolicy policy :
         {ConflictPolicy::kDrop, ConflictPolicy::kFirstWins}) {
      SeedSet x = ResolveConflicts(raw.positive, raw.negative, policy);
      SeedSet y = ResolveConflicts(again.positive, again.negative, policy);
      CHECK(x.positive == y.positive);
      CHECK(x.negative == y.negative);
      for (SynsetId id : x.positive) CHECK_FALSE(x.negative.count(id));
    }
  }
}

TEST_CASE("wordnet seeds") {
  const LexicalKB *kb = testing::WordNetKb();
  if (kb == nullptr) {
    MESSAGE("WordNet not configured; skipping");
    return;
  }
  SeedSet ag = AgSeeds(*kb, 0);
  std::set<SynsetId> expected_pos = {Adj(1123148), Adj(1817500), Adj(2341266)};
  std::set<SynsetId> expected_neg = {Adj(1125429), Adj(1818234), Adj(2345272)};
  CHECK(ag.positive == expected_pos);
  CHECK(ag.negative == expected_neg);

  SeedSet tl = TlSeeds(*kb, 0);
  CHECK(tl.positive.size() == 7);
  CHECK(tl.negative.size() == 7);

  SeedSet ag2 = AgSeeds(*kb, 2);
  CHECK(std::includes(ag2.positive.begin(), ag2.positive.end(),
                      ag.positive.begin(), ag.positive.end()));
}

}  // namespace
}  // namespace lexirank
