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

#include "lexirank/lkb.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "lexirank/error.h"
#include "lexirank/text.h"

namespace lexirank {

namespace {

constexpr const char *kModule = "lkb";

struct RelationName {
  RelationType type;
  const char *name;
};

constexpr std::array<RelationName, kNumRelationTypes> kRelationNames = {{
    {RelationType::kSynonymVariant, "synonym-variant"},
    {RelationType::kAntonym, "antonym"},
    {RelationType::kSimilarTo, "similar-to"},
    {RelationType::kDerivedFrom, "derived-from"},
    {RelationType::kPertainsTo, "pertains-to"},
    {RelationType::kAlsoSee, "also-see"},
    {RelationType::kAttribute, "attribute"},
    {RelationType::kHypernym, "hypernym"},
    {RelationType::kHyponym, "hyponym"},
    {RelationType::kMeronym, "meronym"},
    {RelationType::kHolonym, "holonym"},
    {RelationType::kEntailment, "entailment"},
    {RelationType::kCause, "cause"},
    {RelationType::kVerbGroup, "verb-group"},
    {RelationType::kParticiple, "participle"},
    {RelationType::kDomain, "domain"},
    {RelationType::kGlossLink, "gloss-link"},
    {RelationType::kOther, "other"},
}};

[[noreturn]] void Fail(ErrorKind kind, const std::string &message) {
  throw Error(kind, kModule, message);
}

std::string ReadWholeFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kInput, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// WordNet pointer symbol to relation type. Backslash is a pertainym on
// adjectives and "derived from adjective" on adverbs.
RelationType PointerType(std::string_view symbol, PartOfSpeech source_pos) {
  if (symbol == "!") return RelationType::kAntonym;
  if (symbol == "&") return RelationType::kSimilarTo;
  if (symbol == "^") return RelationType::kAlsoSee;
  if (symbol == "=") return RelationType::kAttribute;
  if (symbol == "+") return RelationType::kDerivedFrom;
  if (symbol == "\\") {
    return source_pos == PartOfSpeech::kAdverb ? RelationType::kDerivedFrom
                                                : RelationType::kPertainsTo;
  }
  if (symbol == "@" || symbol == "@i") return RelationType::kHypernym;
  if (symbol == "~" || symbol == "~i") return RelationType::kHyponym;
  if (symbol == "#m" || symbol == "#s" || symbol == "#p") {
    return RelationType::kHolonym;
  }
  if (symbol == "%m" || symbol == "%s" || symbol == "%p") {
    return RelationType::kMeronym;
  }
  if (symbol == "*") return RelationType::kEntailment;
  if (symbol == ">") return RelationType::kCause;
  if (symbol == "$") return RelationType::kVerbGroup;
  if (symbol == "<") return RelationType::kParticiple;
  if (symbol.size() == 2 && (symbol[0] == ';' || symbol[0] == '-')) {
    return RelationType::kDomain;
  }
  return RelationType::kOther;
}

// Adjective lemmas in data.adj may carry a syntactic marker: "(a)", "(p)"
// or "(ip)".
std::string_view StripAdjectiveMarker(std::string_view word) {
  if (!word.empty() && word.back() == ')') {
    size_t open = word.rfind('(');
    if (open != std::string_view::npos) return word.substr(0, open);
  }
  return word;
}

std::string IntegrityMessage(const std::string &what,
                             const std::vector<std::string> &offenders,
                             size_t total) {
  std::string message = std::to_string(total) + " " + what + ":";
  for (const std::string &offender : offenders) message += " " + offender;
  if (total > offenders.size()) message += " ...";
  return message;
}

}  // namespace

char PosChar(PartOfSpeech pos) { return static_cast<char>(pos); }

std::optional<PartOfSpeech> PosFromChar(char c) {
  switch (c) {
    case 'n': return PartOfSpeech::kNoun;
    case 'v': return PartOfSpeech::kVerb;
    case 'a':
    case 's': return PartOfSpeech::kAdjective;
    case 'r': return PartOfSpeech::kAdverb;
    default: return std::nullopt;
  }
}

std::string SynsetId::ToString() const {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%08u-%c", offset, PosChar(pos));
  return buffer;
}

std::optional<SynsetId> SynsetId::Parse(std::string_view text) {
  constexpr size_t dash = 8;
  if (text.size() != dash + 2 || text[dash] != '-') return std::nullopt;
  auto pos = PosFromChar(text[dash + 1]);
  if (!pos) return std::nullopt;
  uint32_t offset = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + dash, offset);
  if (ec != std::errc() || ptr != text.data() + dash) return std::nullopt;
  return SynsetId{*pos, offset};
}

const char *RelationTypeName(RelationType type) {
  return kRelationNames[static_cast<int>(type)].name;
}

std::optional<RelationType> RelationTypeFromName(std::string_view name) {
  for (const RelationName &entry : kRelationNames) {
    if (name == entry.name) return entry.type;
  }
  return std::nullopt;
}

const char *KbFormatName(KbFormat format) {
  return format == KbFormat::kWordNetDb ? "wordnet-db" : "tsv-graph";
}

std::optional<KbFormat> KbFormatFromName(std::string_view name) {
  if (name == "wordnet-db") return KbFormat::kWordNetDb;
  if (name == "tsv-graph") return KbFormat::kTsvGraph;
  return std::nullopt;
}

std::string NormalizeLemma(std::string_view lemma) {
  std::string result(lemma);
  for (char &c : result) {
    if (c == ' ') {
      c = '_';
    } else {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return result;
}

uint64_t Fnv1a(std::string_view bytes, uint64_t seed) {
  uint64_t hash = seed;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string HexDigest(std::string_view bytes) {
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(Fnv1a(bytes)));
  return buffer;
}

LexicalKB LexicalKB::Create(std::vector<Synset> synsets,
                            std::vector<SenseEntry> senses,
                            std::vector<Relation> relations,
                            Provenance provenance, ParseReport report) {
  if (synsets.empty()) Fail(ErrorKind::kFormat, "no synsets parsed");

  LexicalKB kb;
  std::sort(synsets.begin(), synsets.end(),
            [](const Synset &a, const Synset &b) { return a.id < b.id; });
  for (size_t i = 1; i < synsets.size(); ++i) {
    if (synsets[i].id == synsets[i - 1].id) {
      Fail(ErrorKind::kIntegrity,
           "duplicate synset " + synsets[i].id.ToString());
    }
  }
  kb.synsets_ = std::move(synsets);

  std::vector<std::string> offenders;
  size_t missing = 0;
  auto check = [&](SynsetId id) {
    if (kb.Contains(id)) return;
    ++missing;
    if (offenders.size() < 10) offenders.push_back(id.ToString());
  };

  for (const Relation &relation : relations) {
    check(relation.source);
    check(relation.target);
  }
  if (missing > 0) {
    Fail(ErrorKind::kIntegrity,
         IntegrityMessage("relation endpoints reference unknown synsets",
                          offenders, missing));
  }
  for (const SenseEntry &sense : senses) check(sense.synset);
  if (missing > 0) {
    Fail(ErrorKind::kIntegrity,
         IntegrityMessage("senses reference unknown synsets", offenders,
                          missing));
  }
  if (senses.empty()) Fail(ErrorKind::kFormat, "no senses parsed");

  std::sort(relations.begin(), relations.end());
  size_t before = relations.size();
  relations.erase(std::unique(relations.begin(), relations.end()),
                  relations.end());
  report.duplicate_relations += before - relations.size();
  for (const Relation &relation : relations) {
    if (relation.source == relation.target) {
      Fail(ErrorKind::kIntegrity,
           "self relation on " + relation.source.ToString());
    }
    ++kb.relation_counts_[static_cast<int>(relation.type)];
  }
  kb.relations_ = std::move(relations);

  std::sort(senses.begin(), senses.end(),
            [](const SenseEntry &a, const SenseEntry &b) {
              return std::tie(a.lemma, a.synset.pos, a.sense_rank, a.synset) <
                     std::tie(b.lemma, b.synset.pos, b.sense_rank, b.synset);
            });
  for (size_t i = 0; i < senses.size(); ++i) {
    const SenseEntry &sense = senses[i];
    if (sense.sense_rank < 1) {
      Fail(ErrorKind::kFormat, "non-positive sense rank for " + sense.lemma);
    }
    bool first = i == 0 || senses[i - 1].lemma != sense.lemma ||
                 senses[i - 1].synset.pos != sense.synset.pos;
    if (first && sense.sense_rank != 1) {
      Fail(ErrorKind::kFormat, "lemma " + sense.lemma + "#" +
                                   PosChar(sense.synset.pos) +
                                   " has no sense ranked 1");
    }
    if (!first && senses[i - 1].sense_rank == sense.sense_rank) {
      Fail(ErrorKind::kFormat, "lemma " + sense.lemma + "#" +
                                   PosChar(sense.synset.pos) +
                                   " repeats sense rank " +
                                   std::to_string(sense.sense_rank));
    }
    kb.sense_index_[{sense.lemma, PosChar(sense.synset.pos)}].push_back(
        sense.synset);
  }
  kb.senses_ = std::move(senses);
  kb.provenance_ = std::move(provenance);
  kb.report_ = report;
  return kb;
}

std::optional<size_t> LexicalKB::IndexOf(SynsetId id) const {
  auto it = std::lower_bound(
      synsets_.begin(), synsets_.end(), id,
      [](const Synset &synset, SynsetId key) { return synset.id < key; });
  if (it == synsets_.end() || it->id != id) return std::nullopt;
  return static_cast<size_t>(it - synsets_.begin());
}

std::vector<SynsetId> LexicalKB::SensesOf(std::string_view lemma,
                                          PartOfSpeech pos) const {
  auto it = sense_index_.find(std::pair<std::string, char>(
      std::string(lemma), PosChar(pos)));
  if (it == sense_index_.end()) return {};
  return it->second;
}

std::optional<SynsetId> LexicalKB::MostFrequentSense(std::string_view lemma,
                                                     PartOfSpeech pos) const {
  auto senses = SensesOf(lemma, pos);
  if (senses.empty()) return std::nullopt;
  return senses.front();
}

bool LexicalKB::SameContent(const LexicalKB &other) const {
  return synsets_ == other.synsets_ && senses_ == other.senses_ &&
         relations_ == other.relations_;
}

KbFormat DetectKbFormat(const std::filesystem::path &path) {
  return std::filesystem::is_directory(path) ? KbFormat::kWordNetDb
                                             : KbFormat::kTsvGraph;
}

LexicalKB ParseLkb(const std::filesystem::path &path, KbFormat format) {
  if (!std::filesystem::exists(path)) {
    Fail(ErrorKind::kInput, "no such file or directory: " + path.string());
  }
  if (format == KbFormat::kWordNetDb) {
    if (!std::filesystem::is_directory(path)) {
      Fail(ErrorKind::kFormat,
           "wordnet-db expects a directory with data.* files: " +
               path.string());
    }
    return ParseWordNetDb(path);
  }
  if (std::filesystem::is_directory(path)) {
    Fail(ErrorKind::kFormat, "tsv-graph expects a file: " + path.string());
  }
  std::string bytes = ReadWholeFile(path);
  std::istringstream in(bytes);
  return ParseTsvGraph(in);
}

LexicalKB ParseTsvGraph(std::istream &in) {
  std::vector<Synset> synsets;
  std::vector<SenseEntry> explicit_senses;
  std::vector<Relation> relations;
  ParseReport report;
  std::string digest_input;
  std::vector<std::string> offenders;
  size_t missing = 0;

  std::string line;
  while (std::getline(in, line)) {
    digest_input += line;
    digest_input += '\n';
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string_view> fields = SplitTabs(line);
    const std::string_view tag = fields[0];
    if (tag == "S" && fields.size() == 3) {
      auto id = SynsetId::Parse(fields[1]);
      if (!id) {
        ++report.skipped_lines;
        continue;
      }
      Synset synset{*id, {}};
      for (std::string_view lemma : Split(fields[2], ',')) {
        if (!lemma.empty()) synset.lemmas.push_back(NormalizeLemma(lemma));
      }
      synsets.push_back(std::move(synset));
    } else if (tag == "R" && fields.size() == 4) {
      auto id = SynsetId::Parse(fields[2]);
      auto rank = ParseInt(fields[3]);
      if (!id || !rank || fields[1].empty()) {
        ++report.skipped_lines;
        continue;
      }
      explicit_senses.push_back({NormalizeLemma(fields[1]), *id, *rank});
    } else if (tag == "E" && fields.size() == 4) {
      auto source = SynsetId::Parse(fields[1]);
      auto target = SynsetId::Parse(fields[3]);
      if (!source || !target) {
        ++report.skipped_lines;
        continue;
      }
      if (*source == *target) {
        ++report.self_loops;
        continue;
      }
      auto type = RelationTypeFromName(fields[2]);
      if (!type) {
        ++report.unknown_relation_labels;
        type = RelationType::kOther;
      }
      relations.push_back({*source, *target, *type});
    } else {
      ++report.skipped_lines;
    }
  }

  // Integrity is checked here, rather than in Create, so that the error
  // names the tsv records.
  std::set<SynsetId> declared;
  for (const Synset &synset : synsets) declared.insert(synset.id);
  for (const Relation &relation : relations) {
    for (SynsetId id : {relation.source, relation.target}) {
      if (declared.count(id)) continue;
      ++missing;
      if (offenders.size() < 10) offenders.push_back(id.ToString());
    }
  }
  if (missing > 0) {
    Fail(ErrorKind::kIntegrity,
         IntegrityMessage("relations reference undeclared synsets", offenders,
                          missing));
  }
  if (synsets.empty()) Fail(ErrorKind::kFormat, "no synsets parsed");

  // Explicit R lines take precedence; remaining memberships are ranked in
  // declaration order after the largest explicit rank of their lemma.
  std::map<std::pair<std::string, char>, int> max_rank;
  std::set<std::pair<std::string, SynsetId>> ranked;
  for (const SenseEntry &sense : explicit_senses) {
    if (!declared.count(sense.synset)) {
      Fail(ErrorKind::kIntegrity, "sense rank for undeclared synset " +
                                      sense.synset.ToString());
    }
    auto &slot = max_rank[{sense.lemma, PosChar(sense.synset.pos)}];
    slot = std::max(slot, sense.sense_rank);
    ranked.insert({sense.lemma, sense.synset});
  }
  std::vector<SenseEntry> senses = explicit_senses;
  for (const Synset &synset : synsets) {
    for (const std::string &lemma : synset.lemmas) {
      if (ranked.count({lemma, synset.id})) continue;
      int rank = ++max_rank[{lemma, PosChar(synset.id.pos)}];
      senses.push_back({lemma, synset.id, rank});
      ranked.insert({lemma, synset.id});
    }
  }
  std::set<std::pair<std::string, SynsetId>> memberships;
  for (const Synset &synset : synsets) {
    for (const std::string &lemma : synset.lemmas) {
      memberships.insert({lemma, synset.id});
    }
  }
  for (const SenseEntry &sense : explicit_senses) {
    if (!memberships.count({sense.lemma, sense.synset})) {
      Fail(ErrorKind::kIntegrity, "sense rank names lemma " + sense.lemma +
                                      " absent from " +
                                      sense.synset.ToString());
    }
  }

  return LexicalKB::Create(std::move(synsets), std::move(senses),
                           std::move(relations),
                           {KbFormat::kTsvGraph, HexDigest(digest_input)},
                           report);
}

LexicalKB ParseWordNetDb(const std::filesystem::path &directory) {
  static constexpr std::array<const char *, 4> kDataFiles = {
      "data.noun", "data.verb", "data.adj", "data.adv"};

  std::vector<Synset> synsets;
  std::vector<Relation> relations;
  std::vector<SenseEntry> senses;
  ParseReport report;
  uint64_t digest = 0xcbf29ce484222325ULL;

  for (const char *name : kDataFiles) {
    const std::filesystem::path path = directory / name;
    if (!std::filesystem::exists(path)) {
      Fail(ErrorKind::kInput, "missing " + path.string());
    }
    const std::string bytes = ReadWholeFile(path);
    digest = Fnv1a(bytes, digest);
    size_t start = 0;
    while (start < bytes.size()) {
      size_t end = bytes.find('\n', start);
      if (end == std::string::npos) end = bytes.size();
      std::string_view line(bytes.data() + start, end - start);
      start = end + 1;
      // License header lines start with two spaces.
      if (line.empty() || line[0] == ' ') continue;

      size_t bar = line.find(" | ");
      std::string_view record = line.substr(0, bar);
      std::vector<std::string_view> fields = SplitSpaces(record);

      // synset_offset lex_filenum ss_type w_cnt word lex_id ... p_cnt ...
      auto fail_line = [&] { ++report.skipped_lines; };
      if (fields.size() < 4) {
        fail_line();
        continue;
      }
      auto offset = ParseUnsigned(fields[0]);
      std::optional<PartOfSpeech> pos;
      if (fields[2].size() == 1) pos = PosFromChar(fields[2][0]);
      auto word_count = ParseUnsigned(fields[3], 16);
      if (!offset || !pos || !word_count) {
        fail_line();
        continue;
      }
      size_t cursor = 4;
      Synset synset{{*pos, static_cast<uint32_t>(*offset)}, {}};
      bool ok = fields.size() >= cursor + 2 * *word_count + 1;
      for (uint64_t w = 0; ok && w < *word_count; ++w) {
        synset.lemmas.push_back(
            NormalizeLemma(StripAdjectiveMarker(fields[cursor])));
        cursor += 2;
      }
      std::optional<uint64_t> pointer_count;
      if (ok) pointer_count = ParseUnsigned(fields[cursor++]);
      ok = ok && pointer_count &&
           fields.size() >= cursor + 4 * *pointer_count;
      if (!ok) {
        fail_line();
        continue;
      }
      for (uint64_t p = 0; p < *pointer_count; ++p) {
        std::string_view symbol = fields[cursor];
        auto target_offset = ParseUnsigned(fields[cursor + 1]);
        auto target_pos = fields[cursor + 2].size() == 1
                              ? PosFromChar(fields[cursor + 2][0])
                              : std::nullopt;
        cursor += 4;
        if (!target_offset || !target_pos) {
          ++report.skipped_lines;
          continue;
        }
        SynsetId target{*target_pos, static_cast<uint32_t>(*target_offset)};
        if (target == synset.id) {
          ++report.self_loops;
          continue;
        }
        relations.push_back({synset.id, target, PointerType(symbol, *pos)});
      }
      synsets.push_back(std::move(synset));
    }
  }

  // index.sense: sense_key synset_offset sense_number tag_cnt, where
  // sense_key is lemma%ss_type:lex_filenum:lex_id:head_word:head_id.
  const std::filesystem::path index_path = directory / "index.sense";
  if (!std::filesystem::exists(index_path)) {
    Fail(ErrorKind::kInput, "missing " + index_path.string());
  }
  const std::string index_bytes = ReadWholeFile(index_path);
  digest = Fnv1a(index_bytes, digest);
  size_t start = 0;
  while (start < index_bytes.size()) {
    size_t end = index_bytes.find('\n', start);
    if (end == std::string::npos) end = index_bytes.size();
    std::string_view line(index_bytes.data() + start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    std::vector<std::string_view> fields = SplitSpaces(line);
    if (fields.size() != 4) {
      ++report.skipped_lines;
      continue;
    }
    size_t percent = fields[0].find('%');
    auto offset = ParseUnsigned(fields[1]);
    auto rank = ParseInt(fields[2]);
    if (percent == std::string_view::npos || percent + 1 >= fields[0].size() ||
        !offset || !rank) {
      ++report.skipped_lines;
      continue;
    }
    std::optional<PartOfSpeech> pos;
    switch (fields[0][percent + 1]) {
      case '1': pos = PartOfSpeech::kNoun; break;
      case '2': pos = PartOfSpeech::kVerb; break;
      case '3':
      case '5': pos = PartOfSpeech::kAdjective; break;
      case '4': pos = PartOfSpeech::kAdverb; break;
      default: break;
    }
    if (!pos) {
      ++report.skipped_lines;
      continue;
    }
    senses.push_back({NormalizeLemma(fields[0].substr(0, percent)),
                      {*pos, static_cast<uint32_t>(*offset)},
                      *rank});
  }

  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(digest));
  return LexicalKB::Create(std::move(synsets), std::move(senses),
                           std::move(relations),
                           {KbFormat::kWordNetDb, buffer}, report);
}

void WriteTsvGraph(const LexicalKB &kb, std::ostream &out) {
  out << "# lexirank tsv-graph\n";
  for (const Synset &synset : kb.synsets()) {
    out << "S\t" << synset.id.ToString() << '\t';
    for (size_t i = 0; i < synset.lemmas.size(); ++i) {
      if (i > 0) out << ',';
      out << synset.lemmas[i];
    }
    out << '\n';
  }
  for (const SenseEntry &sense : kb.senses()) {
    out << "R\t" << sense.lemma << '\t' << sense.synset.ToString() << '\t'
        << sense.sense_rank << '\n';
  }
  for (const Relation &relation : kb.relations()) {
    out << "E\t" << relation.source.ToString() << '\t'
        << RelationTypeName(relation.type) << '\t'
        << relation.target.ToString() << '\n';
  }
}

}  // namespace lexirank
