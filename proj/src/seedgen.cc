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
#include <istream>
#include <ostream>

#include "lexirank/error.h"
#include "lexirank/text.h"

namespace lexirank {

namespace {

constexpr const char *kModule = "seedgen";

constexpr const char *kQualityLemma = "quality";
const std::set<std::string, std::less<>> kPositiveAnchors = {
    "positive", "good", "superior"};
const std::set<std::string, std::less<>> kNegativeAnchors = {
    "negative", "bad", "inferior"};

enum class Label { kPositive, kNegative, kConflict };

void Record(ReachDepths &depths, SynsetId id, int depth) {
  auto [it, inserted] = depths.emplace(id, depth);
  if (!inserted) it->second = std::min(it->second, depth);
}

std::string JoinRelations(const std::vector<RelationType> &relations) {
  std::string joined;
  for (RelationType type : relations) {
    if (!joined.empty()) joined += ',';
    joined += RelationTypeName(type);
  }
  return joined;
}

}  // namespace

const char *PolarityName(Polarity p) {
  return p == Polarity::kPositive ? "pos" : "neg";
}

std::optional<Polarity> PolarityFromName(std::string_view name) {
  if (name == "pos") return Polarity::kPositive;
  if (name == "neg") return Polarity::kNegative;
  return std::nullopt;
}

const char *SeedMethodName(SeedMethod method) {
  return method == SeedMethod::kAG ? "AG" : "TL";
}

std::optional<SeedMethod> SeedMethodFromName(std::string_view name) {
  if (name == "AG") return SeedMethod::kAG;
  if (name == "TL") return SeedMethod::kTL;
  return std::nullopt;
}

const char *ConflictPolicyName(ConflictPolicy policy) {
  return policy == ConflictPolicy::kDrop ? "drop" : "first-wins";
}

std::optional<ConflictPolicy> ConflictPolicyFromName(std::string_view name) {
  if (name == "drop") return ConflictPolicy::kDrop;
  if (name == "first-wins") return ConflictPolicy::kFirstWins;
  return std::nullopt;
}

SeedSet ResolveConflicts(const ReachDepths &positive,
                         const ReachDepths &negative, ConflictPolicy policy) {
  SeedSet seeds;
  seeds.policy = policy;
  for (const auto &[id, depth] : positive) {
    auto other = negative.find(id);
    if (other == negative.end()) {
      seeds.positive.insert(id);
      continue;
    }
    if (policy == ConflictPolicy::kFirstWins && depth != other->second) {
      (depth < other->second ? seeds.positive : seeds.negative).insert(id);
    } else {
      ++seeds.conflicts_removed;
    }
  }
  for (const auto &[id, depth] : negative) {
    if (!positive.count(id)) seeds.negative.insert(id);
  }
  return seeds;
}

ExpansionGraph MakeExpansionGraph(const LexicalKB &kb,
                                  const std::vector<RelationType> &relations) {
  std::set<RelationType> wanted(relations.begin(), relations.end());
  ExpansionGraph graph(kb.size());
  for (const Relation &relation : kb.relations()) {
    if (!wanted.count(relation.type)) continue;
    size_t a = *kb.IndexOf(relation.source);
    size_t b = *kb.IndexOf(relation.target);
    bool flips = relation.type == RelationType::kAntonym;
    graph[a].push_back({b, flips});
    graph[b].push_back({a, flips});
  }
  for (auto &links : graph) {
    std::sort(links.begin(), links.end(),
              [](const ExpansionLink &x, const ExpansionLink &y) {
                return std::tie(x.target, x.flips) < std::tie(y.target, y.flips);
              });
    links.erase(std::unique(links.begin(), links.end(),
                            [](const ExpansionLink &x, const ExpansionLink &y) {
                              return x.target == y.target && x.flips == y.flips;
                            }),
                links.end());
  }
  return graph;
}

RawExpansion Expand(const LexicalKB &kb, const ExpansionGraph &graph,
                    const std::set<SynsetId> &base_positive,
                    const std::set<SynsetId> &base_negative, int iterations) {
  if (iterations < 0) {
    throw Error(ErrorKind::kUsage, kModule, "iterations must be >= 0");
  }
  RawExpansion raw;
  std::map<size_t, Label> labels;
  std::vector<size_t> frontier;

  auto index_of = [&](SynsetId id) {
    auto index = kb.IndexOf(id);
    if (!index) {
      throw Error(ErrorKind::kIntegrity, kModule,
                  "seed " + id.ToString() + " is not in the knowledge base");
    }
    return *index;
  };
  for (SynsetId id : base_positive) {
    Record(raw.positive, id, 0);
    labels[index_of(id)] = Label::kPositive;
  }
  for (SynsetId id : base_negative) {
    Record(raw.negative, id, 0);
    size_t index = index_of(id);
    auto [it, inserted] = labels.emplace(index, Label::kNegative);
    if (!inserted) it->second = Label::kConflict;
  }
  for (const auto &[index, label] : labels) {
    if (label != Label::kConflict) frontier.push_back(index);
  }

  for (int depth = 1; depth <= iterations && !frontier.empty(); ++depth) {
    // Polarities with which each unlabeled synset is reached at this depth.
    std::map<size_t, std::pair<bool, bool>> reached;
    for (size_t source : frontier) {
      const Polarity from = labels[source] == Label::kPositive
                                ? Polarity::kPositive
                                : Polarity::kNegative;
      for (const ExpansionLink &link : graph[source]) {
        const Polarity polarity = link.flips ? Flip(from) : from;
        const SynsetId id = kb.synset(link.target).id;
        Record(polarity == Polarity::kPositive ? raw.positive : raw.negative,
               id, depth);
        if (labels.count(link.target)) continue;
        auto &slot = reached[link.target];
        (polarity == Polarity::kPositive ? slot.first : slot.second) = true;
      }
    }
    frontier.clear();
    for (const auto &[index, seen] : reached) {
      if (seen.first && seen.second) {
        labels[index] = Label::kConflict;
      } else {
        labels[index] = seen.first ? Label::kPositive : Label::kNegative;
        frontier.push_back(index);
      }
    }
    if (frontier.empty()) raw.fixed_point_at = depth - 1;
  }
  if (iterations > 0 && frontier.empty() && !raw.fixed_point_at) {
    raw.fixed_point_at = 0;
  }
  return raw;
}

std::vector<RelationType> DefaultTlRelations() {
  return {RelationType::kAntonym, RelationType::kSimilarTo,
          RelationType::kDerivedFrom, RelationType::kPertainsTo,
          RelationType::kAlsoSee};
}

std::vector<RelationType> DefaultAgRelations() {
  std::vector<RelationType> relations = DefaultTlRelations();
  relations.push_back(RelationType::kAttribute);
  return relations;
}

SeedSet AgSeeds(const LexicalKB &kb, int iterations,
                const std::vector<RelationType> &relations,
                ConflictPolicy policy) {
  if (iterations < 0 || iterations > kMaxSeedIterations) {
    throw Error(ErrorKind::kUsage, kModule,
                "iterations must lie in 0.." +
                    std::to_string(kMaxSeedIterations));
  }
  std::set<SynsetId> quality;
  for (SynsetId id : kb.SensesOf(kQualityLemma, PartOfSpeech::kNoun)) {
    quality.insert(id);
  }

  std::set<SynsetId> base_positive;
  std::set<SynsetId> base_negative;
  for (const Relation &relation : kb.relations()) {
    if (relation.type != RelationType::kAttribute) continue;
    SynsetId adjective;
    if (quality.count(relation.source)) {
      adjective = relation.target;
    } else if (quality.count(relation.target)) {
      adjective = relation.source;
    } else {
      continue;
    }
    if (adjective.pos != PartOfSpeech::kAdjective) continue;
    const Synset &synset = kb.synset(*kb.IndexOf(adjective));
    for (const std::string &lemma : synset.lemmas) {
      if (kPositiveAnchors.count(lemma)) {
        base_positive.insert(adjective);
        break;
      }
      if (kNegativeAnchors.count(lemma)) {
        base_negative.insert(adjective);
        break;
      }
    }
  }
  if (base_positive.empty() || base_negative.empty()) {
    throw Error(ErrorKind::kUnsupported, kModule,
                "knowledge base has no quality noun synsets with attribute "
                "links to positive and negative adjectives");
  }

  RawExpansion raw =
      Expand(kb, MakeExpansionGraph(kb, relations), base_positive,
             base_negative, iterations);
  SeedSet seeds = ResolveConflicts(raw.positive, raw.negative, policy);
  seeds.method = SeedMethod::kAG;
  seeds.iteration = iterations;
  seeds.relations = relations;
  seeds.fixed_point_at = raw.fixed_point_at;
  return seeds;
}

std::vector<SeedWord> DefaultTlSeedWords() {
  std::vector<SeedWord> words;
  for (const char *lemma : {"good", "nice", "excellent", "positive",
                            "fortunate", "correct", "superior"}) {
    words.push_back({lemma, PartOfSpeech::kAdjective, Polarity::kPositive});
  }
  for (const char *lemma : {"bad", "nasty", "poor", "negative", "unfortunate",
                            "wrong", "inferior"}) {
    words.push_back({lemma, PartOfSpeech::kAdjective, Polarity::kNegative});
  }
  return words;
}

std::vector<SeedWord> ReadSeedWords(std::istream &in) {
  std::vector<SeedWord> words;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view text = Trim(line);
    if (text.empty() || text[0] == '#') continue;
    auto fields = SplitSpaces(text);
    std::optional<Polarity> polarity;
    if (fields.size() == 2) polarity = PolarityFromName(fields[1]);
    if (!polarity) {
      throw Error(ErrorKind::kFormat, kModule,
                  "seed words line " + std::to_string(line_number) +
                      ": expected '<lemma[#pos]> <TAB> pos|neg'");
    }
    SeedWord word;
    word.polarity = *polarity;
    std::string_view key = fields[0];
    size_t hash = key.rfind('#');
    if (hash != std::string_view::npos && hash + 2 == key.size()) {
      auto pos = PosFromChar(key[hash + 1]);
      if (!pos) {
        throw Error(ErrorKind::kFormat, kModule,
                    "seed words line " + std::to_string(line_number) +
                        ": unknown part of speech");
      }
      word.pos = *pos;
      key = key.substr(0, hash);
    }
    word.lemma = NormalizeLemma(key);
    words.push_back(std::move(word));
  }
  return words;
}

SeedSet TlSeeds(const LexicalKB &kb, int iterations,
                const std::vector<SeedWord> &words, ConflictPolicy policy,
                bool skip_unresolved) {
  if (iterations < 0 || iterations > kMaxSeedIterations) {
    throw Error(ErrorKind::kUsage, kModule,
                "iterations must lie in 0.." +
                    std::to_string(kMaxSeedIterations));
  }
  std::set<SynsetId> base_positive;
  std::set<SynsetId> base_negative;
  std::vector<std::string> skipped;
  for (const SeedWord &word : words) {
    auto sense = kb.MostFrequentSense(word.lemma, word.pos);
    if (!sense) {
      std::string name = word.lemma + "#" + PosChar(word.pos);
      if (!skip_unresolved) {
        throw Error(ErrorKind::kUnsupported, kModule,
                    "seed lemma " + name + " has no sense in the knowledge "
                    "base");
      }
      skipped.push_back(name);
      continue;
    }
    (word.polarity == Polarity::kPositive ? base_positive : base_negative)
        .insert(*sense);
  }
  if (base_positive.empty() && base_negative.empty()) {
    throw Error(ErrorKind::kUnsupported, kModule, "no seed lemma resolved");
  }

  const std::vector<RelationType> relations = DefaultTlRelations();
  RawExpansion raw =
      Expand(kb, MakeExpansionGraph(kb, relations), base_positive,
             base_negative, iterations);
  SeedSet seeds = ResolveConflicts(raw.positive, raw.negative, policy);
  seeds.method = SeedMethod::kTL;
  seeds.iteration = iterations;
  seeds.relations = relations;
  seeds.fixed_point_at = raw.fixed_point_at;
  seeds.skipped_lemmas = std::move(skipped);
  return seeds;
}

void WriteSeedSet(const SeedSet &seeds, std::ostream &out) {
  out << "# method: " << SeedMethodName(seeds.method) << '\n'
      << "# iteration: " << seeds.iteration << '\n'
      << "# relations: " << JoinRelations(seeds.relations) << '\n'
      << "# policy: " << ConflictPolicyName(seeds.policy) << '\n'
      << "# positive: " << seeds.positive.size() << '\n'
      << "# negative: " << seeds.negative.size() << '\n'
      << "# conflicts_removed: " << seeds.conflicts_removed << '\n';
  if (seeds.fixed_point_at) {
    out << "# fixed_point_at: " << *seeds.fixed_point_at << '\n';
  }
  // Merge both sets so the body is sorted by synset id.
  std::map<SynsetId, Polarity> all;
  for (SynsetId id : seeds.positive) all[id] = Polarity::kPositive;
  for (SynsetId id : seeds.negative) all[id] = Polarity::kNegative;
  for (const auto &[id, polarity] : all) {
    out << id.ToString() << '\t' << PolarityName(polarity) << '\n';
  }
}

SeedSet ReadSeedSet(std::istream &in) {
  SeedSet seeds;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view text = Trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      text = Trim(text.substr(1));
      size_t colon = text.find(':');
      if (colon == std::string_view::npos) continue;
      std::string_view key = Trim(text.substr(0, colon));
      std::string_view value = Trim(text.substr(colon + 1));
      if (key == "method") {
        if (auto method = SeedMethodFromName(value)) seeds.method = *method;
      } else if (key == "iteration") {
        if (auto iteration = ParseInt(value)) seeds.iteration = *iteration;
      } else if (key == "policy") {
        if (auto policy = ConflictPolicyFromName(value)) seeds.policy = *policy;
      } else if (key == "relations") {
        for (std::string_view name : Split(value, ',')) {
          if (auto type = RelationTypeFromName(name)) {
            seeds.relations.push_back(*type);
          }
        }
      }
      continue;
    }
    auto fields = SplitTabs(text);
    std::optional<SynsetId> id;
    std::optional<Polarity> polarity;
    if (fields.size() == 2) {
      id = SynsetId::Parse(fields[0]);
      polarity = PolarityFromName(fields[1]);
    }
    if (!id || !polarity) {
      throw Error(ErrorKind::kFormat, kModule,
                  "seed file line " + std::to_string(line_number) +
                      ": expected '<synset-id> <TAB> pos|neg'");
    }
    (*polarity == Polarity::kPositive ? seeds.positive : seeds.negative)
        .insert(*id);
  }
  for (SynsetId id : seeds.positive) {
    if (seeds.negative.count(id)) {
      throw Error(ErrorKind::kIntegrity, kModule,
                  "seed " + id.ToString() + " listed with both polarities");
    }
  }
  return seeds;
}

}  // namespace lexirank
