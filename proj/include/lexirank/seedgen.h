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

// Seed generation. Both methods start from a small labeled base and grow it
// breadth first over a set of relations: a neighbour inherits the polarity
// of the synset it was reached from, flipped when the edge is an antonymy.
// Labels, once assigned, are never changed; every reach is still recorded
// so that the conflict policy can see contradicting evidence.

#ifndef LEXIRANK_SEEDGEN_H_
#define LEXIRANK_SEEDGEN_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexirank/lkb.h"

namespace lexirank {

enum class Polarity { kPositive, kNegative };

inline Polarity Flip(Polarity p) {
  return p == Polarity::kPositive ? Polarity::kNegative : Polarity::kPositive;
}
const char *PolarityName(Polarity p);  // "pos" / "neg"
std::optional<Polarity> PolarityFromName(std::string_view name);

enum class SeedMethod { kAG, kTL };
const char *SeedMethodName(SeedMethod method);
std::optional<SeedMethod> SeedMethodFromName(std::string_view name);

enum class ConflictPolicy { kDrop, kFirstWins };
const char *ConflictPolicyName(ConflictPolicy policy);
std::optional<ConflictPolicy> ConflictPolicyFromName(std::string_view name);

inline constexpr int kMaxSeedIterations = 15;

struct SeedSet {
  SeedMethod method = SeedMethod::kAG;
  int iteration = 0;
  ConflictPolicy policy = ConflictPolicy::kDrop;
  std::vector<RelationType> relations;
  std::set<SynsetId> positive;
  std::set<SynsetId> negative;

  // Run metadata.
  size_t conflicts_removed = 0;
  // Last iteration that labeled new synsets, when growth stopped early.
  std::optional<int> fixed_point_at;
  std::vector<std::string> skipped_lemmas;
};

// Minimum expansion depth at which a synset was reached with one polarity.
using ReachDepths = std::map<SynsetId, int>;

// drop: synsets reached with both polarities are removed from both.
// first-wins: the polarity reached at the smaller depth is kept, equal
// depths are removed.
SeedSet ResolveConflicts(const ReachDepths &positive,
                         const ReachDepths &negative, ConflictPolicy policy);

struct ExpansionLink {
  size_t target;
  bool flips;  // antonymy
};

// Adjacency over knowledge base indices used by the breadth-first walk.
using ExpansionGraph = std::vector<std::vector<ExpansionLink>>;

ExpansionGraph MakeExpansionGraph(const LexicalKB &kb,
                                  const std::vector<RelationType> &relations);

struct RawExpansion {
  ReachDepths positive;
  ReachDepths negative;
  std::optional<int> fixed_point_at;
};

RawExpansion Expand(const LexicalKB &kb, const ExpansionGraph &graph,
                    const std::set<SynsetId> &base_positive,
                    const std::set<SynsetId> &base_negative, int iterations);

std::vector<RelationType> DefaultTlRelations();
// The TL relations plus attribute.
std::vector<RelationType> DefaultAgRelations();

// Starts from the adjectives that "quality" noun synsets reach through the
// attribute relation, labeled by the positive/negative anchor lemmas.
SeedSet AgSeeds(const LexicalKB &kb, int iterations,
                const std::vector<RelationType> &relations =
                    DefaultAgRelations(),
                ConflictPolicy policy = ConflictPolicy::kDrop);

struct SeedWord {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kAdjective;
  Polarity polarity = Polarity::kPositive;
};

// good, nice, excellent, positive, fortunate, correct, superior /
// bad, nasty, poor, negative, unfortunate, wrong, inferior; all adjectives.
std::vector<SeedWord> DefaultTlSeedWords();

// "lemma[#pos] <TAB> pos|neg" per line, '#' comments; pos defaults to a.
std::vector<SeedWord> ReadSeedWords(std::istream &in);

SeedSet TlSeeds(const LexicalKB &kb, int iterations,
                const std::vector<SeedWord> &words = DefaultTlSeedWords(),
                ConflictPolicy policy = ConflictPolicy::kDrop,
                bool skip_unresolved = false);

void WriteSeedSet(const SeedSet &seeds, std::ostream &out);
SeedSet ReadSeedSet(std::istream &in);

}  // namespace lexirank

#endif  // LEXIRANK_SEEDGEN_H_
