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

#include "lexirank/eval.h"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>

#include "lexirank/error.h"
#include "lexirank/text.h"

namespace lexirank {

namespace {

constexpr const char *kModule = "eval";

size_t ClassIndex(Polarity p) { return p == Polarity::kPositive ? 0 : 1; }

void CheckLevel(const PolarityLexicon &lexicon, const MatchOptions &options) {
  const bool ok = (options.mode == MatchMode::kWord) ==
                  (lexicon.level() == LexiconLevel::kWord);
  if (!ok) {
    throw Error(ErrorKind::kUsage, kModule,
                std::string(options.mode == MatchMode::kWord ? "word"
                                                             : "synset") +
                    " matching needs a " +
                    (options.mode == MatchMode::kWord ? "word" : "synset") +
                    " lexicon, got " + LexiconLevelName(lexicon.level()));
  }
}

int Sign(std::optional<double> score) {
  if (!score) return 0;
  return *score > 0 ? 1 : -1;
}

double SafeRatio(size_t numerator, size_t denominator) {
  return denominator == 0 ? 0.0
                          : static_cast<double>(numerator) /
                                static_cast<double>(denominator);
}

ClassMetrics Metrics(size_t true_positive, size_t predicted, size_t gold) {
  ClassMetrics m;
  m.precision = SafeRatio(true_positive, predicted);
  m.recall = SafeRatio(true_positive, gold);
  m.f1 = m.precision + m.recall == 0.0
             ? 0.0
             : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

}  // namespace

MatchOptions MatchFor(const PolarityLexicon &lexicon) {
  MatchOptions options;
  options.mode = lexicon.level() == LexiconLevel::kWord ? MatchMode::kWord
                                                        : MatchMode::kSynset;
  return options;
}

int TokenPolarity(const AnnotatedToken &token, const PolarityLexicon &lexicon,
                  const MatchOptions &options) {
  if (options.mode == MatchMode::kSynset) {
    if (!token.synset) return 0;
    return Sign(lexicon.Score(token.synset->ToString()));
  }
  if (!token.pos) return 0;
  int sign = Sign(lexicon.Score(MakeWordKey(token.lemma, *token.pos)));
  if (sign == 0 && options.surface_fallback) {
    sign = Sign(lexicon.Score(
        MakeWordKey(NormalizeLemma(token.surface), *token.pos)));
  }
  return sign;
}

double AvgRatio(const Document &doc, const PolarityLexicon &lexicon,
                const MatchOptions &options) {
  CheckLevel(lexicon, options);
  if (doc.tokens.empty()) return 0.0;
  int net = 0;
  for (const AnnotatedToken &token : doc.tokens) {
    net += TokenPolarity(token, lexicon, options);
  }
  return static_cast<double>(net) / static_cast<double>(doc.tokens.size());
}

double TuneThresholdOnScores(std::span<const double> scores,
                             std::span<const Polarity> gold) {
  if (scores.empty() || scores.size() != gold.size()) {
    throw Error(ErrorKind::kEvaluation, kModule,
                "threshold tuning needs a non-empty labeled dev set");
  }
  std::vector<double> distinct(scores.begin(), scores.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());

  std::vector<double> candidates;
  candidates.push_back(distinct.front() - 1.0);
  for (size_t i = 1; i < distinct.size(); ++i) {
    candidates.push_back((distinct[i - 1] + distinct[i]) / 2.0);
  }
  candidates.push_back(distinct.back() + 1.0);

  // Sweep candidates in increasing order; items with score >= t are
  // positive, so raising t past a score flips that item to negative.
  std::vector<size_t> order(scores.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return scores[a] < scores[b]; });

  size_t correct = 0;
  for (Polarity g : gold) correct += g == Polarity::kPositive;
  size_t cursor = 0;
  double best_threshold = candidates.front();
  size_t best_correct = 0;
  bool first = true;
  for (double t : candidates) {
    while (cursor < order.size() && scores[order[cursor]] < t) {
      correct += gold[order[cursor]] == Polarity::kNegative ? 1 : 0;
      correct -= gold[order[cursor]] == Polarity::kPositive ? 1 : 0;
      ++cursor;
    }
    if (first || correct > best_correct) {
      best_correct = correct;
      best_threshold = t;
      first = false;
    }
  }
  return best_threshold;
}

double TuneThreshold(std::span<const Document> dev,
                     const PolarityLexicon &lexicon,
                     const MatchOptions &options) {
  std::vector<double> scores;
  std::vector<Polarity> gold;
  for (const Document &doc : dev) {
    scores.push_back(AvgRatio(doc, lexicon, options));
    gold.push_back(doc.gold);
  }
  return TuneThresholdOnScores(scores, gold);
}

EvalReport MakeReport(const std::array<std::array<size_t, 2>, 2> &confusion,
                      const std::array<size_t, 2> &untagged) {
  EvalReport report;
  report.confusion = confusion;
  report.untagged = untagged;
  const size_t gold_pos = confusion[0][0] + confusion[0][1] + untagged[0];
  const size_t gold_neg = confusion[1][0] + confusion[1][1] + untagged[1];
  report.total = gold_pos + gold_neg;
  report.positive =
      Metrics(confusion[0][0], confusion[0][0] + confusion[1][0], gold_pos);
  report.negative =
      Metrics(confusion[1][1], confusion[0][1] + confusion[1][1], gold_neg);
  report.accuracy =
      SafeRatio(confusion[0][0] + confusion[1][1], report.total);
  return report;
}

EvalReport ClassifyDocuments(std::span<const Document> test,
                             const PolarityLexicon &lexicon, double threshold,
                             const MatchOptions &options) {
  std::array<std::array<size_t, 2>, 2> confusion{};
  for (const Document &doc : test) {
    const Polarity predicted = AvgRatio(doc, lexicon, options) >= threshold
                                   ? Polarity::kPositive
                                   : Polarity::kNegative;
    ++confusion[ClassIndex(doc.gold)][ClassIndex(predicted)];
  }
  EvalReport report = MakeReport(confusion);
  report.threshold = threshold;
  return report;
}

std::optional<Polarity> PhrasePolarity(const Document &phrase,
                                       const PolarityLexicon &lexicon,
                                       const MatchOptions &options) {
  CheckLevel(lexicon, options);
  bool any_positive = false;
  for (const AnnotatedToken &token : phrase.tokens) {
    const int sign = TokenPolarity(token, lexicon, options);
    if (sign < 0) return Polarity::kNegative;
    any_positive = any_positive || sign > 0;
  }
  if (any_positive) return Polarity::kPositive;
  return std::nullopt;
}

EvalReport ClassifyPhrases(std::span<const Document> phrases,
                           const PolarityLexicon &lexicon,
                           const MatchOptions &options) {
  CheckLevel(lexicon, options);
  std::array<std::array<size_t, 2>, 2> confusion{};
  std::array<size_t, 2> untagged{};
  for (const Document &phrase : phrases) {
    auto predicted = PhrasePolarity(phrase, lexicon, options);
    if (predicted) {
      ++confusion[ClassIndex(phrase.gold)][ClassIndex(*predicted)];
    } else {
      ++untagged[ClassIndex(phrase.gold)];
    }
  }
  return MakeReport(confusion, untagged);
}

EvalReport IntrinsicEval(const PolarityLexicon &lexicon,
                         const PolarityLexicon &gold) {
  if (lexicon.level() != LexiconLevel::kWord ||
      gold.level() != LexiconLevel::kWord) {
    throw Error(ErrorKind::kUsage, kModule,
                "intrinsic evaluation compares two word lexicons");
  }
  std::array<std::array<size_t, 2>, 2> confusion{};
  size_t intersection = 0;
  for (const auto &[key, gold_score] : gold.entries()) {
    auto score = lexicon.Score(key);
    if (!score) continue;
    ++intersection;
    const size_t g = gold_score > 0 ? 0 : 1;
    const size_t p = *score > 0 ? 0 : 1;
    ++confusion[g][p];
  }
  if (intersection == 0) {
    throw Error(ErrorKind::kEvaluation, kModule,
                "lexicon and gold share no entries");
  }
  EvalReport report = MakeReport(confusion);
  report.intersection = intersection;
  return report;
}

AnnotatedToken ParseToken(std::string_view text) {
  auto parts = Split(text, '|');
  if (parts.size() != 3 && parts.size() != 4) {
    throw Error(ErrorKind::kFormat, kModule,
                "token '" + std::string(text) +
                    "' is not surface|lemma|pos[|synset-id]");
  }
  AnnotatedToken token;
  token.surface = std::string(parts[0]);
  token.lemma = NormalizeLemma(parts[1]);
  if (parts[2].size() == 1) token.pos = PosFromChar(parts[2][0]);
  if (parts.size() == 4 && !parts[3].empty()) {
    token.synset = SynsetId::Parse(parts[3]);
    if (!token.synset) {
      throw Error(ErrorKind::kFormat, kModule,
                  "bad synset id in token '" + std::string(text) + "'");
    }
  }
  return token;
}

std::vector<Document> ReadCorpus(std::istream &in) {
  std::vector<Document> documents;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    std::optional<Polarity> gold;
    if (fields.size() == 2 || fields.size() == 3) {
      gold = PolarityFromName(fields[1]);
    }
    if (!gold) {
      throw Error(ErrorKind::kFormat, kModule,
                  "corpus line " + std::to_string(line_number) +
                      ": expected '<id> <TAB> pos|neg <TAB> tokens'");
    }
    Document doc;
    doc.id = std::string(fields[0]);
    doc.gold = *gold;
    if (fields.size() == 3) {
      for (std::string_view token : SplitSpaces(fields[2])) {
        doc.tokens.push_back(ParseToken(token));
      }
    }
    documents.push_back(std::move(doc));
  }
  return documents;
}

std::string FormatReport(const EvalReport &report, const std::string &name) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %9s %9s %9s %9s\n", "class",
                "precision", "recall", "f1", "gold");
  out << line;
  const size_t gold_pos =
      report.confusion[0][0] + report.confusion[0][1] + report.untagged[0];
  const size_t gold_neg =
      report.confusion[1][0] + report.confusion[1][1] + report.untagged[1];
  std::snprintf(line, sizeof(line), "%-10s %9.4f %9.4f %9.4f %9zu\n",
                "positive", report.positive.precision, report.positive.recall,
                report.positive.f1, gold_pos);
  out << line;
  std::snprintf(line, sizeof(line), "%-10s %9.4f %9.4f %9.4f %9zu\n",
                "negative", report.negative.precision, report.negative.recall,
                report.negative.f1, gold_neg);
  out << line;

  out << "name=" << name << '\n';
  out << "accuracy=" << FormatScore(report.accuracy) << '\n';
  out << "macro_f1=" << FormatScore(report.MacroF1()) << '\n';
  out << "pos_precision=" << FormatScore(report.positive.precision) << '\n';
  out << "pos_recall=" << FormatScore(report.positive.recall) << '\n';
  out << "pos_f1=" << FormatScore(report.positive.f1) << '\n';
  out << "neg_precision=" << FormatScore(report.negative.precision) << '\n';
  out << "neg_recall=" << FormatScore(report.negative.recall) << '\n';
  out << "neg_f1=" << FormatScore(report.negative.f1) << '\n';
  out << "tp_pos=" << report.confusion[0][0] << '\n';
  out << "fn_pos=" << report.confusion[0][1] << '\n';
  out << "fp_pos=" << report.confusion[1][0] << '\n';
  out << "tn_pos=" << report.confusion[1][1] << '\n';
  out << "untagged=" << report.untagged[0] + report.untagged[1] << '\n';
  out << "total=" << report.total << '\n';
  if (report.threshold) {
    out << "threshold=" << FormatScore(*report.threshold) << '\n';
  }
  if (report.intersection) {
    out << "intersection=" << *report.intersection << '\n';
  }
  return out.str();
}

}  // namespace lexirank
