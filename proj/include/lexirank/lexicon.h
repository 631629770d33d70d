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

#ifndef LEXIRANK_LEXICON_H_
#define LEXIRANK_LEXICON_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexirank/graph.h"
#include "lexirank/lkb.h"
#include "lexirank/ppv.h"
#include "lexirank/seedgen.h"

namespace lexirank {

enum class LexiconLevel { kSynset, kWord };
const char *LexiconLevelName(LexiconLevel level);
std::optional<LexiconLevel> LexiconLevelFromName(std::string_view name);

// "lemma#pos".
std::string MakeWordKey(std::string_view lemma, PartOfSpeech pos);
std::optional<std::pair<std::string, PartOfSpeech>> ParseWordKey(
    std::string_view key);

using Metadata = std::vector<std::pair<std::string, std::string>>;

// Signed scores keyed by synset id ("01123148-a") or word key ("good#a").
// The sign is the polarity; zero scores are never stored.
class PolarityLexicon {
 public:
  explicit PolarityLexicon(LexiconLevel level = LexiconLevel::kSynset)
      : level_(level) {}

  LexiconLevel level() const { return level_; }
  const std::map<std::string, double> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Ignores exact zeros; the key must match the level.
  void Set(const std::string &key, double score);

  std::optional<double> Score(std::string_view key) const;
  std::optional<Polarity> PolarityOf(std::string_view key) const;
  size_t CountPolarity(Polarity polarity) const;

  Metadata &metadata() { return metadata_; }
  const Metadata &metadata() const { return metadata_; }
  std::optional<std::string> MetadataValue(std::string_view key) const;

  friend bool operator==(const PolarityLexicon &a, const PolarityLexicon &b) {
    return a.level_ == b.level_ && a.entries_ == b.entries_;
  }

 private:
  LexiconLevel level_;
  std::map<std::string, double> entries_;
  Metadata metadata_;
};

// pol(s) = sum of positive rankings - sum of negative rankings; exact
// zeros are left out. All vectors must share one node index.
PolarityLexicon Combine(std::span<const RankVector> positive_ranks,
                        std::span<const RankVector> negative_ranks);

// Four propagations over the synonymy and antonymy graphs. Positive seeds
// over antonymy and negative seeds over synonymy count as negative
// rankings; the other two as positive.
PolarityLexicon AssembleG1(const PropagationGraph &synonymy,
                           const PropagationGraph &antonymy,
                           const SeedSet &seeds, const PpvConfig &config);

// One propagation per polarity over a G2, G3 or G4 graph.
PolarityLexicon AssembleSingle(const PropagationGraph &graph,
                               const SeedSet &seeds, const PpvConfig &config);

// Every lemma of every lexicon synset votes with the synset's polarity; the
// majority wins (ties excluded) and the word score is the sum of the
// winning synsets' scores.
PolarityLexicon SynsetToWord(const PolarityLexicon &lexicon,
                             const LexicalKB &kb);

struct WordToSynsetResult {
  PolarityLexicon lexicon{LexiconLevel::kSynset};
  size_t skipped_words = 0;  // no sense in the knowledge base
};

// Each word labels its most frequent sense only; scores landing on one
// synset are summed and zero sums dropped.
WordToSynsetResult WordToSynset(const PolarityLexicon &lexicon,
                                const LexicalKB &kb);

// "<key> TAB pos|neg TAB <score>" after "# key: value" metadata lines.
void WriteLexicon(const PolarityLexicon &lexicon, std::ostream &out);
PolarityLexicon ReadLexicon(std::istream &in);

}  // namespace lexirank

#endif  // LEXIRANK_LEXICON_H_
