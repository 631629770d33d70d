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

// End-to-end lexicon induction and configuration sweeps.

#ifndef LEXIRANK_PIPELINE_H_
#define LEXIRANK_PIPELINE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexirank/eval.h"
#include "lexirank/graph.h"
#include "lexirank/lexicon.h"
#include "lexirank/lkb.h"
#include "lexirank/ppv.h"
#include "lexirank/seedgen.h"

namespace lexirank {

// How a lexicon is assembled: G1 uses the synonymy/antonymy pair, the others
// one graph each.
enum class Assembly { kG1, kG2, kG3, kG4 };
const char *AssemblyName(Assembly assembly);
std::optional<Assembly> AssemblyFromName(std::string_view name);

struct PipelineConfig {
  SeedMethod method = SeedMethod::kAG;
  int iterations = 1;
  Assembly assembly = Assembly::kG1;
  LexiconLevel level = LexiconLevel::kSynset;
  ConflictPolicy policy = ConflictPolicy::kDrop;
  PpvConfig ppv;
  std::vector<RelationType> ag_relations = DefaultAgRelations();
  std::vector<SeedWord> seed_words = DefaultTlSeedWords();
  bool skip_unresolved = false;

  // "s03_G1" / "w01_G3".
  std::string Name() const;

  Metadata ToMetadata() const;
  // Inverse of ToMetadata; throws Error(kFormat) on missing keys.
  static PipelineConfig FromMetadata(const Metadata &metadata);
};

// Word-level entry: every lemma of a seed synset contributes all of its
// senses with the same part of speech. Synsets that end up on both sides
// are removed.
SeedSet ExpandSeedsToWordSenses(const SeedSet &seeds, const LexicalKB &kb);

// Graph projections over one knowledge base, built on demand. Thread safe
// once Prepare has been called for every assembly in use.
class GraphCache {
 public:
  explicit GraphCache(const LexicalKB &kb);

  void Prepare(Assembly assembly);
  const PropagationGraph &Get(GraphVariant variant);
  const LexicalKB &kb() const { return kb_; }

 private:
  const LexicalKB &kb_;
  std::shared_ptr<const NodeIndex> nodes_;
  std::map<GraphVariant, std::unique_ptr<PropagationGraph>> graphs_;
};

struct PipelineResult {
  PolarityLexicon lexicon;
  SeedSet seeds;
  std::vector<std::string> warnings;
};

PipelineResult RunPipeline(GraphCache &graphs, const PipelineConfig &config);

// Runs the pipeline and writes the lexicon with its provenance header.
PipelineResult RunPipelineToFile(GraphCache &graphs,
                                 const PipelineConfig &config,
                                 const std::filesystem::path &out);

struct SweepSpec {
  std::vector<SeedMethod> methods = {SeedMethod::kAG, SeedMethod::kTL};
  std::vector<int> iterations = {0, 1, 2};
  std::vector<Assembly> assemblies = {Assembly::kG1, Assembly::kG3};
  std::vector<LexiconLevel> levels = {LexiconLevel::kSynset};
  PipelineConfig base;  // ppv, policy, relations and seed words

  size_t JobCount() const;
  void Validate() const;
  std::vector<PipelineConfig> Jobs() const;
};

struct EvalCorpus {
  std::vector<Document> dev;
  std::vector<Document> test;
};

struct SweepRow {
  PipelineConfig config;
  std::string name;  // "AG s03_G1"
  bool ok = false;
  std::string error;
  size_t size = 0;
  size_t positives = 0;
  size_t negatives = 0;
  std::optional<EvalReport> report;
  std::filesystem::path lexicon_path;
};

// Executes every job on up to `workers` threads. With a corpus each
// lexicon is threshold-tuned on dev and scored on test. Rows are ordered by
// macro-F1 (descending) when evaluated, otherwise by name; failed jobs sort
// last and keep their error message.
std::vector<SweepRow> RunSweep(const LexicalKB &kb, const SweepSpec &spec,
                               const std::optional<EvalCorpus> &corpus,
                               const std::optional<std::filesystem::path> &out,
                               size_t workers);

std::string FormatSweepTable(const std::vector<SweepRow> &rows);

}  // namespace lexirank

#endif  // LEXIRANK_PIPELINE_H_
