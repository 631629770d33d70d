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

// Lexicon evaluation: the average-ratio document classifier with a tuned
// threshold, the negative-dominant phrase rule, and agreement with a gold
// word lexicon.
//
// Corpus files hold one item per line:
//
//   <id> <TAB> pos|neg <TAB> <token> <token> ...
//
// with each token written surface|lemma|pos[|synset-id].

#ifndef LEXIRANK_EVAL_H_
#define LEXIRANK_EVAL_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexirank/lexicon.h"
#include "lexirank/lkb.h"
#include "lexirank/seedgen.h"

namespace lexirank {

struct AnnotatedToken {
  std::string surface;
  std::string lemma;
  std::optional<PartOfSpeech> pos;  // unset for closed-class tags
  std::optional<SynsetId> synset;
};

struct Document {
  std::string id;
  std::vector<AnnotatedToken> tokens;
  Polarity gold = Polarity::kPositive;
};

enum class MatchMode { kWord, kSynset };

struct MatchOptions {
  MatchMode mode = MatchMode::kWord;
  // Retry with the lowercased surface form when the lemma misses.
  bool surface_fallback = false;
};

// The lexicon level implied by a match mode.
MatchOptions MatchFor(const PolarityLexicon &lexicon);

// +1 positive entry, -1 negative entry, 0 absent.
int TokenPolarity(const AnnotatedToken &token, const PolarityLexicon &lexicon,
                  const MatchOptions &options);

// Net lexicon hits over the token count; 0 for an empty document.
double AvgRatio(const Document &doc, const PolarityLexicon &lexicon,
                const MatchOptions &options);

// Threshold maximizing dev accuracy of (score >= t -> positive). Candidates
// are the midpoints between consecutive distinct scores plus one sentinel
// below the minimum and one above the maximum; ties go to the smallest t.
double TuneThreshold(std::span<const Document> dev,
                     const PolarityLexicon &lexicon,
                     const MatchOptions &options);

// Same search over precomputed scores.
double TuneThresholdOnScores(std::span<const double> scores,
                             std::span<const Polarity> gold);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  // confusion[gold][predicted], index 0 = pos, 1 = neg.
  std::array<std::array<size_t, 2>, 2> confusion{};
  // Items left without a prediction, by gold class.
  std::array<size_t, 2> untagged{};
  ClassMetrics positive;
  ClassMetrics negative;
  double accuracy = 0.0;
  size_t total = 0;
  std::optional<double> threshold;
  std::optional<size_t> intersection;

  double MacroF1() const { return (positive.f1 + negative.f1) / 2.0; }
};

// Fills the derived metrics from confusion and untagged counts. Recall is
// over all gold items of a class, precision over predicted items only.
EvalReport MakeReport(const std::array<std::array<size_t, 2>, 2> &confusion,
                      const std::array<size_t, 2> &untagged = {});

EvalReport ClassifyDocuments(std::span<const Document> test,
                             const PolarityLexicon &lexicon, double threshold,
                             const MatchOptions &options);

// Negative if any token is in the negative lexicon, else positive if any
// token is in the positive lexicon, else untagged.
std::optional<Polarity> PhrasePolarity(const Document &phrase,
                                       const PolarityLexicon &lexicon,
                                       const MatchOptions &options);

EvalReport ClassifyPhrases(std::span<const Document> phrases,
                           const PolarityLexicon &lexicon,
                           const MatchOptions &options);

// Agreement on the keys both word lexicons contain. Per-polarity accuracy
// is the recall of each gold class.
EvalReport IntrinsicEval(const PolarityLexicon &lexicon,
                         const PolarityLexicon &gold);

std::vector<Document> ReadCorpus(std::istream &in);
AnnotatedToken ParseToken(std::string_view text);

// Aligned table followed by "key=value" lines.
std::string FormatReport(const EvalReport &report, const std::string &name);

}  // namespace lexirank

#endif  // LEXIRANK_EVAL_H_
