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

#include "lexirank/lexicon.h"

#include <istream>
#include <ostream>

#include "lexirank/error.h"
#include "lexirank/text.h"

namespace lexirank {

namespace {

constexpr const char *kModule = "lexicon";

std::vector<SynsetId> ToVector(const std::set<SynsetId> &ids) {
  return {ids.begin(), ids.end()};
}

RankVector Propagate(const PropagationGraph &graph,
                     const std::set<SynsetId> &seeds, const PpvConfig &config,
                     const std::string &label, Metadata &stats) {
  std::vector<SynsetId> seed_list = ToVector(seeds);
  PersonalizationVector v = MakePersonalization(graph, seed_list);
  RankVector ranks = PageRank(graph, v, config);
  stats.emplace_back("run." + label,
                     std::string("graph=") + GraphVariantName(graph.variant()) +
                         " seeds=" + std::to_string(seeds.size()) +
                         " iterations=" + std::to_string(ranks.iterations_run) +
                         " residual=" + FormatScore(ranks.residual) +
                         (ranks.converged ? "" : " unconverged"));
  return ranks;
}

void RequireSeeds(const SeedSet &seeds) {
  if (seeds.positive.empty() || seeds.negative.empty()) {
    throw Error(ErrorKind::kInput, kModule,
                "both seed polarities must be non-empty");
  }
}

}  // namespace

const char *LexiconLevelName(LexiconLevel level) {
  return level == LexiconLevel::kSynset ? "synset" : "word";
}

std::optional<LexiconLevel> LexiconLevelFromName(std::string_view name) {
  if (name == "synset" || name == "s") return LexiconLevel::kSynset;
  if (name == "word" || name == "w") return LexiconLevel::kWord;
  return std::nullopt;
}

std::string MakeWordKey(std::string_view lemma, PartOfSpeech pos) {
  std::string key = NormalizeLemma(lemma);
  key += '#';
  key += PosChar(pos);
  return key;
}

std::optional<std::pair<std::string, PartOfSpeech>> ParseWordKey(
    std::string_view key) {
  size_t hash = key.rfind('#');
  if (hash == std::string_view::npos || hash == 0 || hash + 2 != key.size()) {
    return std::nullopt;
  }
  auto pos = PosFromChar(key[hash + 1]);
  if (!pos) return std::nullopt;
  return std::make_pair(std::string(key.substr(0, hash)), *pos);
}

void PolarityLexicon::Set(const std::string &key, double score) {
  bool valid = level_ == LexiconLevel::kSynset
                   ? SynsetId::Parse(key).has_value()
                   : ParseWordKey(key).has_value();
  if (!valid) {
    throw Error(ErrorKind::kFormat, kModule,
                "key '" + key + "' does not match a " +
                    LexiconLevelName(level_) + " lexicon");
  }
  if (score == 0.0) {
    entries_.erase(key);
    return;
  }
  entries_[key] = score;
}

std::optional<double> PolarityLexicon::Score(std::string_view key) const {
  auto it = entries_.find(std::string(key));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<Polarity> PolarityLexicon::PolarityOf(
    std::string_view key) const {
  auto score = Score(key);
  if (!score) return std::nullopt;
  return *score > 0 ? Polarity::kPositive : Polarity::kNegative;
}

size_t PolarityLexicon::CountPolarity(Polarity polarity) const {
  size_t count = 0;
  for (const auto &[key, score] : entries_) {
    if ((score > 0) == (polarity == Polarity::kPositive)) ++count;
  }
  return count;
}

std::optional<std::string> PolarityLexicon::MetadataValue(
    std::string_view key) const {
  for (const auto &[k, v] : metadata_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

PolarityLexicon Combine(std::span<const RankVector> positive_ranks,
                        std::span<const RankVector> negative_ranks) {
  if (positive_ranks.empty() || negative_ranks.empty()) {
    throw Error(ErrorKind::kUsage, kModule,
                "combine needs at least one ranking per polarity");
  }
  const auto &nodes = positive_ranks.front().nodes;
  if (!nodes) throw Error(ErrorKind::kUsage, kModule, "ranking without nodes");
  auto check = [&](const RankVector &ranks) {
    if (!ranks.nodes || ranks.scores.size() != nodes->size() ||
        ranks.nodes->size() != nodes->size() ||
        ranks.nodes->fingerprint() != nodes->fingerprint()) {
      throw Error(ErrorKind::kIntegrity, kModule,
                  "rankings are over different node spaces");
    }
  };
  for (const RankVector &ranks : positive_ranks) check(ranks);
  for (const RankVector &ranks : negative_ranks) check(ranks);

  PolarityLexicon lexicon(LexiconLevel::kSynset);
  for (size_t i = 0; i < nodes->size(); ++i) {
    double positive = 0.0;
    for (const RankVector &ranks : positive_ranks) positive += ranks.scores[i];
    double negative = 0.0;
    for (const RankVector &ranks : negative_ranks) negative += ranks.scores[i];
    const double score = positive - negative;
    if (score != 0.0) lexicon.Set(nodes->id(i).ToString(), score);
  }
  return lexicon;
}

PolarityLexicon AssembleG1(const PropagationGraph &synonymy,
                           const PropagationGraph &antonymy,
                           const SeedSet &seeds, const PpvConfig &config) {
  if (synonymy.variant() != GraphVariant::kG1Syn ||
      antonymy.variant() != GraphVariant::kG1Ant) {
    throw Error(ErrorKind::kUsage, kModule,
                "G1 assembly needs a G1SYN and a G1ANT graph");
  }
  RequireSeeds(seeds);
  Metadata stats;
  RankVector pos_syn =
      Propagate(synonymy, seeds.positive, config, "pos_syn", stats);
  RankVector pos_ant =
      Propagate(antonymy, seeds.positive, config, "pos_ant", stats);
  RankVector neg_syn =
      Propagate(synonymy, seeds.negative, config, "neg_syn", stats);
  RankVector neg_ant =
      Propagate(antonymy, seeds.negative, config, "neg_ant", stats);

  const RankVector positive[] = {std::move(pos_syn), std::move(neg_ant)};
  const RankVector negative[] = {std::move(neg_syn), std::move(pos_ant)};
  PolarityLexicon lexicon = Combine(positive, negative);
  lexicon.metadata() = std::move(stats);
  return lexicon;
}

PolarityLexicon AssembleSingle(const PropagationGraph &graph,
                               const SeedSet &seeds, const PpvConfig &config) {
  if (graph.variant() == GraphVariant::kG1Syn ||
      graph.variant() == GraphVariant::kG1Ant) {
    throw Error(ErrorKind::kUsage, kModule,
                "single-graph assembly needs G2, G3 or G4");
  }
  RequireSeeds(seeds);
  Metadata stats;
  RankVector pos = Propagate(graph, seeds.positive, config, "pos", stats);
  RankVector neg = Propagate(graph, seeds.negative, config, "neg", stats);
  const RankVector positive[] = {std::move(pos)};
  const RankVector negative[] = {std::move(neg)};
  PolarityLexicon lexicon = Combine(positive, negative);
  lexicon.metadata() = std::move(stats);
  return lexicon;
}

PolarityLexicon SynsetToWord(const PolarityLexicon &lexicon,
                             const LexicalKB &kb) {
  if (lexicon.level() != LexiconLevel::kSynset) {
    throw Error(ErrorKind::kUsage, kModule, "expected a synset lexicon");
  }
  struct Votes {
    int positive = 0;
    int negative = 0;
    double positive_sum = 0.0;
    double negative_sum = 0.0;
  };
  std::map<std::string, Votes> votes;
  for (const auto &[key, score] : lexicon.entries()) {
    auto id = SynsetId::Parse(key);
    auto index = id ? kb.IndexOf(*id) : std::nullopt;
    if (!index) continue;
    for (const std::string &lemma : kb.synset(*index).lemmas) {
      Votes &v = votes[MakeWordKey(lemma, id->pos)];
      if (score > 0) {
        ++v.positive;
        v.positive_sum += score;
      } else {
        ++v.negative;
        v.negative_sum += score;
      }
    }
  }
  PolarityLexicon words(LexiconLevel::kWord);
  for (const auto &[key, v] : votes) {
    if (v.positive > v.negative) {
      words.Set(key, v.positive_sum);
    } else if (v.negative > v.positive) {
      words.Set(key, v.negative_sum);
    }
  }
  words.metadata() = lexicon.metadata();
  return words;
}

WordToSynsetResult WordToSynset(const PolarityLexicon &lexicon,
                                const LexicalKB &kb) {
  if (lexicon.level() != LexiconLevel::kWord) {
    throw Error(ErrorKind::kUsage, kModule, "expected a word lexicon");
  }
  WordToSynsetResult result;
  std::map<SynsetId, double> sums;
  for (const auto &[key, score] : lexicon.entries()) {
    auto word = ParseWordKey(key);
    auto sense = word ? kb.MostFrequentSense(word->first, word->second)
                      : std::nullopt;
    if (!sense) {
      ++result.skipped_words;
      continue;
    }
    sums[*sense] += score;
  }
  for (const auto &[id, score] : sums) {
    if (score != 0.0) result.lexicon.Set(id.ToString(), score);
  }
  result.lexicon.metadata() = lexicon.metadata();
  return result;
}

void WriteLexicon(const PolarityLexicon &lexicon, std::ostream &out) {
  out << "# level: " << LexiconLevelName(lexicon.level()) << '\n';
  for (const auto &[key, value] : lexicon.metadata()) {
    if (key == "level") continue;
    out << "# " << key << ": " << value << '\n';
  }
  for (const auto &[key, score] : lexicon.entries()) {
    out << key << '\t' << (score > 0 ? "pos" : "neg") << '\t'
        << FormatScore(score) << '\n';
  }
}

PolarityLexicon ReadLexicon(std::istream &in) {
  Metadata metadata;
  std::vector<std::pair<std::string, double>> rows;
  std::optional<LexiconLevel> level;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string_view text = Trim(std::string_view(line).substr(1));
      size_t colon = text.find(": ");
      if (colon == std::string_view::npos) continue;
      std::string key(Trim(text.substr(0, colon)));
      std::string value(Trim(text.substr(colon + 2)));
      if (key == "level") {
        level = LexiconLevelFromName(value);
        if (!level) {
          throw Error(ErrorKind::kFormat, kModule, "unknown level " + value);
        }
      } else {
        metadata.emplace_back(std::move(key), std::move(value));
      }
      continue;
    }
    auto fields = SplitTabs(line);
    std::optional<double> score;
    std::optional<Polarity> polarity;
    if (fields.size() == 3) {
      score = ParseDouble(fields[2]);
      polarity = PolarityFromName(fields[1]);
    } else if (fields.size() == 2) {
      // Gold lists may carry only a label.
      polarity = PolarityFromName(fields[1]);
      if (polarity) score = *polarity == Polarity::kPositive ? 1.0 : -1.0;
    }
    if (!score || !polarity || *score == 0.0 ||
        (*score > 0) != (*polarity == Polarity::kPositive)) {
      throw Error(ErrorKind::kFormat, kModule,
                  "lexicon line " + std::to_string(line_number) +
                      ": expected '<key> <TAB> pos|neg <TAB> <score>' with a "
                      "matching non-zero sign");
    }
    rows.emplace_back(std::string(fields[0]), *score);
  }
  if (!level) {
    level = !rows.empty() && SynsetId::Parse(rows.front().first)
                ? LexiconLevel::kSynset
                : LexiconLevel::kWord;
  }
  PolarityLexicon lexicon(*level);
  for (const auto &[key, score] : rows) {
    if (lexicon.Score(key)) {
      throw Error(ErrorKind::kFormat, kModule, "duplicate key " + key);
    }
    lexicon.Set(key, score);
  }
  lexicon.metadata() = std::move(metadata);
  return lexicon;
}

}  // namespace lexirank
