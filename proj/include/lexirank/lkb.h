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

// Lexical knowledge base: synsets, lemma senses and typed relations, read
// either from a Princeton-style WordNet database directory or from the
// line-oriented tsv-graph format:
//
//   S <TAB> <synset-id> <TAB> <lemma1,lemma2,...>
//   R <TAB> <lemma> <TAB> <synset-id> <TAB> <rank>
//   E <TAB> <synset-id> <TAB> <rel-type> <TAB> <synset-id>
//
// Synset ids render as "<8-digit offset>-<pos>", e.g. "01123148-a".

#ifndef LEXIRANK_LKB_H_
#define LEXIRANK_LKB_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexirank {

enum class PartOfSpeech : char {
  kAdjective = 'a',
  kNoun = 'n',
  kAdverb = 'r',
  kVerb = 'v',
};

char PosChar(PartOfSpeech pos);

// Accepts n, v, a, r and the WordNet satellite tag s (folded into a).
std::optional<PartOfSpeech> PosFromChar(char c);

struct SynsetId {
  PartOfSpeech pos = PartOfSpeech::kNoun;
  uint32_t offset = 0;

  std::string ToString() const;
  static std::optional<SynsetId> Parse(std::string_view text);

  friend auto operator<=>(const SynsetId &, const SynsetId &) = default;
};

enum class RelationType {
  kSynonymVariant,
  kAntonym,
  kSimilarTo,
  kDerivedFrom,
  kPertainsTo,
  kAlsoSee,
  kAttribute,
  kHypernym,
  kHyponym,
  kMeronym,
  kHolonym,
  kEntailment,
  kCause,
  kVerbGroup,
  kParticiple,
  kDomain,
  kGlossLink,
  kOther,
};

inline constexpr int kNumRelationTypes =
    static_cast<int>(RelationType::kOther) + 1;

const char *RelationTypeName(RelationType type);
std::optional<RelationType> RelationTypeFromName(std::string_view name);

struct SenseEntry {
  std::string lemma;
  SynsetId synset;
  int sense_rank = 1;

  friend bool operator==(const SenseEntry &, const SenseEntry &) = default;
};

struct Relation {
  SynsetId source;
  SynsetId target;
  RelationType type = RelationType::kOther;

  friend auto operator<=>(const Relation &, const Relation &) = default;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;

  friend bool operator==(const Synset &, const Synset &) = default;
};

enum class KbFormat { kWordNetDb, kTsvGraph };

const char *KbFormatName(KbFormat format);
std::optional<KbFormat> KbFormatFromName(std::string_view name);

struct ParseReport {
  size_t skipped_lines = 0;
  size_t unknown_relation_labels = 0;
  size_t self_loops = 0;
  size_t duplicate_relations = 0;
};

struct Provenance {
  KbFormat format = KbFormat::kTsvGraph;
  std::string digest;  // FNV-1a 64 over the source bytes, hex
};

// Lowercases and replaces spaces with underscores.
std::string NormalizeLemma(std::string_view lemma);

// Immutable after construction. Synsets are kept sorted by (pos, offset),
// relations sorted and deduplicated, senses sorted by (lemma, pos, rank).
class LexicalKB {
 public:
  LexicalKB() = default;

  // Validates the invariants and throws lexirank::Error on violation.
  static LexicalKB Create(std::vector<Synset> synsets,
                          std::vector<SenseEntry> senses,
                          std::vector<Relation> relations,
                          Provenance provenance, ParseReport report = {});

  const std::vector<Synset> &synsets() const { return synsets_; }
  const std::vector<SenseEntry> &senses() const { return senses_; }
  const std::vector<Relation> &relations() const { return relations_; }
  const Provenance &provenance() const { return provenance_; }
  const ParseReport &report() const { return report_; }

  size_t size() const { return synsets_.size(); }
  std::optional<size_t> IndexOf(SynsetId id) const;
  bool Contains(SynsetId id) const { return IndexOf(id).has_value(); }
  const Synset &synset(size_t index) const { return synsets_[index]; }

  // Synsets of a lemma ordered by sense rank; empty when unknown.
  std::vector<SynsetId> SensesOf(std::string_view lemma,
                                 PartOfSpeech pos) const;
  std::optional<SynsetId> MostFrequentSense(std::string_view lemma,
                                            PartOfSpeech pos) const;

  size_t CountRelations(RelationType type) const {
    return relation_counts_[static_cast<int>(type)];
  }

  // Content equality; provenance and parse counters are ignored.
  bool SameContent(const LexicalKB &other) const;

 private:
  std::vector<Synset> synsets_;
  std::vector<SenseEntry> senses_;
  std::vector<Relation> relations_;
  Provenance provenance_;
  ParseReport report_;
  std::vector<size_t> relation_counts_ = std::vector<size_t>(kNumRelationTypes);
  // (lemma, pos) -> synsets ordered by rank.
  std::map<std::pair<std::string, char>, std::vector<SynsetId>, std::less<>>
      sense_index_;
};

LexicalKB ParseLkb(const std::filesystem::path &path, KbFormat format);

// Picks wordnet-db for directories and tsv-graph for regular files.
KbFormat DetectKbFormat(const std::filesystem::path &path);

LexicalKB ParseTsvGraph(std::istream &in);
LexicalKB ParseWordNetDb(const std::filesystem::path &directory);

void WriteTsvGraph(const LexicalKB &kb, std::ostream &out);

// FNV-1a 64-bit, rendered as 16 hex digits.
std::string HexDigest(std::string_view bytes);
uint64_t Fnv1a(std::string_view bytes, uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace lexirank

#endif  // LEXIRANK_LKB_H_
