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

#include "lexirank/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "lexirank/error.h"
#include "lexirank/text.h"

namespace lexirank {

namespace {

constexpr const char *kModule = "pipeline";

std::string JoinRelations(const std::vector<RelationType> &relations) {
  std::string joined;
  for (RelationType type : relations) {
    if (!joined.empty()) joined += ',';
    joined += RelationTypeName(type);
  }
  return joined;
}

std::string JoinSeedWords(const std::vector<SeedWord> &words) {
  std::string joined;
  for (const SeedWord &word : words) {
    if (!joined.empty()) joined += ',';
    joined += MakeWordKey(word.lemma, word.pos);
    joined += ':';
    joined += PolarityName(word.polarity);
  }
  return joined;
}

const std::string &Require(const std::map<std::string, std::string> &values,
                           const std::string &key) {
  auto it = values.find(key);
  if (it == values.end()) {
    throw Error(ErrorKind::kFormat, kModule, "metadata lacks '" + key + "'");
  }
  return it->second;
}

[[noreturn]] void BadMetadata(const std::string &key) {
  throw Error(ErrorKind::kFormat, kModule, "bad metadata value for " + key);
}

}  // namespace

const char *AssemblyName(Assembly assembly) {
  switch (assembly) {
    case Assembly::kG1: return "G1";
    case Assembly::kG2: return "G2";
    case Assembly::kG3: return "G3";
    case Assembly::kG4: return "G4";
  }
  return "?";
}

std::optional<Assembly> AssemblyFromName(std::string_view name) {
  for (Assembly assembly :
       {Assembly::kG1, Assembly::kG2, Assembly::kG3, Assembly::kG4}) {
    if (name == AssemblyName(assembly)) return assembly;
  }
  return std::nullopt;
}

std::string PipelineConfig::Name() const {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%c%02d_%s",
                level == LexiconLevel::kSynset ? 's' : 'w', iterations,
                AssemblyName(assembly));
  return buffer;
}

Metadata PipelineConfig::ToMetadata() const {
  return {
      {"config", Name()},
      {"method", SeedMethodName(method)},
      {"iterations", std::to_string(iterations)},
      {"graph", AssemblyName(assembly)},
      {"conflict_policy", ConflictPolicyName(policy)},
      {"damping", FormatShortest(ppv.damping)},
      {"tolerance", FormatShortest(ppv.tolerance)},
      {"max_iterations", std::to_string(ppv.max_iterations)},
      {"accept_unconverged", ppv.accept_unconverged ? "true" : "false"},
      {"ag_relations", JoinRelations(ag_relations)},
      {"seed_words", JoinSeedWords(seed_words)},
      {"skip_unresolved", skip_unresolved ? "true" : "false"},
  };
}

PipelineConfig PipelineConfig::FromMetadata(const Metadata &metadata) {
  std::map<std::string, std::string> values(metadata.begin(), metadata.end());
  PipelineConfig config;

  const std::string &config_name = Require(values, "config");
  if (config_name.empty()) BadMetadata("config");
  auto level = LexiconLevelFromName(config_name.substr(0, 1));
  if (!level) BadMetadata("config");
  config.level = *level;

  auto method = SeedMethodFromName(Require(values, "method"));
  if (!method) BadMetadata("method");
  config.method = *method;
  auto iterations = ParseInt(Require(values, "iterations"));
  if (!iterations) BadMetadata("iterations");
  config.iterations = *iterations;
  auto assembly = AssemblyFromName(Require(values, "graph"));
  if (!assembly) BadMetadata("graph");
  config.assembly = *assembly;
  auto policy = ConflictPolicyFromName(Require(values, "conflict_policy"));
  if (!policy) BadMetadata("conflict_policy");
  config.policy = *policy;

  auto damping = ParseDouble(Require(values, "damping"));
  auto tolerance = ParseDouble(Require(values, "tolerance"));
  auto max_iterations = ParseInt(Require(values, "max_iterations"));
  if (!damping || !tolerance || !max_iterations) BadMetadata("ppv");
  config.ppv.damping = *damping;
  config.ppv.tolerance = *tolerance;
  config.ppv.max_iterations = *max_iterations;
  config.ppv.accept_unconverged =
      Require(values, "accept_unconverged") == "true";
  config.skip_unresolved = Require(values, "skip_unresolved") == "true";

  config.ag_relations.clear();
  for (std::string_view name : Split(Require(values, "ag_relations"), ',')) {
    auto type = RelationTypeFromName(name);
    if (!type) BadMetadata("ag_relations");
    config.ag_relations.push_back(*type);
  }
  config.seed_words.clear();
  for (std::string_view item : Split(Require(values, "seed_words"), ',')) {
    size_t colon = item.rfind(':');
    if (colon == std::string_view::npos) BadMetadata("seed_words");
    auto word = ParseWordKey(item.substr(0, colon));
    auto polarity = PolarityFromName(item.substr(colon + 1));
    if (!word || !polarity) BadMetadata("seed_words");
    config.seed_words.push_back({word->first, word->second, *polarity});
  }
  return config;
}

SeedSet ExpandSeedsToWordSenses(const SeedSet &seeds, const LexicalKB &kb) {
  ReachDepths positive;
  ReachDepths negative;
  auto expand = [&](const std::set<SynsetId> &ids, ReachDepths &out) {
    for (SynsetId id : ids) {
      auto index = kb.IndexOf(id);
      if (!index) continue;
      for (const std::string &lemma : kb.synset(*index).lemmas) {
        for (SynsetId sense : kb.SensesOf(lemma, id.pos)) out.emplace(sense, 0);
      }
    }
  };
  expand(seeds.positive, positive);
  expand(seeds.negative, negative);
  SeedSet result = ResolveConflicts(positive, negative, ConflictPolicy::kDrop);
  result.method = seeds.method;
  result.iteration = seeds.iteration;
  result.policy = seeds.policy;
  result.relations = seeds.relations;
  result.fixed_point_at = seeds.fixed_point_at;
  result.skipped_lemmas = seeds.skipped_lemmas;
  result.conflicts_removed += seeds.conflicts_removed;
  return result;
}

GraphCache::GraphCache(const LexicalKB &kb)
    : kb_(kb), nodes_(MakeNodeIndex(kb)) {}

void GraphCache::Prepare(Assembly assembly) {
  switch (assembly) {
    case Assembly::kG1:
      Get(GraphVariant::kG1Syn);
      Get(GraphVariant::kG1Ant);
      break;
    case Assembly::kG2: Get(GraphVariant::kG2); break;
    case Assembly::kG3: Get(GraphVariant::kG3); break;
    case Assembly::kG4: Get(GraphVariant::kG4); break;
  }
}

const PropagationGraph &GraphCache::Get(GraphVariant variant) {
  auto &slot = graphs_[variant];
  if (!slot) {
    slot = std::make_unique<PropagationGraph>(
        BuildGraph(kb_, nodes_, variant));
  }
  return *slot;
}

PipelineResult RunPipeline(GraphCache &graphs, const PipelineConfig &config) {
  const LexicalKB &kb = graphs.kb();
  config.ppv.Validate();
  PipelineResult result;

  result.seeds = config.method == SeedMethod::kAG
                     ? AgSeeds(kb, config.iterations, config.ag_relations,
                               config.policy)
                     : TlSeeds(kb, config.iterations, config.seed_words,
                               config.policy, config.skip_unresolved);
  for (const std::string &lemma : result.seeds.skipped_lemmas) {
    result.warnings.push_back("seed lemma " + lemma + " skipped");
  }
  SeedSet propagation_seeds =
      config.level == LexiconLevel::kWord
          ? ExpandSeedsToWordSenses(result.seeds, kb)
          : result.seeds;

  PolarityLexicon lexicon;
  switch (config.assembly) {
    case Assembly::kG1:
      lexicon = AssembleG1(graphs.Get(GraphVariant::kG1Syn),
                           graphs.Get(GraphVariant::kG1Ant),
                           propagation_seeds, config.ppv);
      break;
    case Assembly::kG2: {
      const PropagationGraph &graph = graphs.Get(GraphVariant::kG2);
      if (graph.gloss_links_absent()) {
        result.warnings.push_back(
            "no gloss-link relations in the knowledge base; G2 equals G3");
      }
      lexicon = AssembleSingle(graph, propagation_seeds, config.ppv);
      break;
    }
    case Assembly::kG3:
      lexicon = AssembleSingle(graphs.Get(GraphVariant::kG3),
                               propagation_seeds, config.ppv);
      break;
    case Assembly::kG4:
      lexicon = AssembleSingle(graphs.Get(GraphVariant::kG4),
                               propagation_seeds, config.ppv);
      break;
  }
  Metadata runs = std::move(lexicon.metadata());
  if (config.level == LexiconLevel::kWord) lexicon = SynsetToWord(lexicon, kb);

  Metadata metadata = config.ToMetadata();
  metadata.emplace_back("kb_format", KbFormatName(kb.provenance().format));
  metadata.emplace_back("kb_digest", kb.provenance().digest);
  metadata.emplace_back("seeds_positive",
                        std::to_string(propagation_seeds.positive.size()));
  metadata.emplace_back("seeds_negative",
                        std::to_string(propagation_seeds.negative.size()));
  metadata.emplace_back("seed_conflicts_removed",
                        std::to_string(propagation_seeds.conflicts_removed));
  if (result.seeds.fixed_point_at) {
    metadata.emplace_back("seed_fixed_point_at",
                          std::to_string(*result.seeds.fixed_point_at));
  }
  metadata.insert(metadata.end(), runs.begin(), runs.end());
  metadata.emplace_back("entries", std::to_string(lexicon.size()));
  lexicon.metadata() = std::move(metadata);
  result.lexicon = std::move(lexicon);
  return result;
}

PipelineResult RunPipelineToFile(GraphCache &graphs,
                                 const PipelineConfig &config,
                                 const std::filesystem::path &out) {
  PipelineResult result = RunPipeline(graphs, config);
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::kInput, kModule, "cannot write " + out.string());
  }
  WriteLexicon(result.lexicon, file);
  return result;
}

size_t SweepSpec::JobCount() const {
  return methods.size() * iterations.size() * assemblies.size() *
         levels.size();
}

void SweepSpec::Validate() const {
  if (methods.empty() || iterations.empty() || assemblies.empty() ||
      levels.empty()) {
    throw Error(ErrorKind::kUsage, kModule,
                "every sweep dimension needs at least one value");
  }
  for (int iteration : iterations) {
    if (iteration < 0 || iteration > kMaxSeedIterations) {
      throw Error(ErrorKind::kUsage, kModule,
                  "sweep iterations must lie in 0.." +
                      std::to_string(kMaxSeedIterations));
    }
  }
  base.ppv.Validate();
}

std::vector<PipelineConfig> SweepSpec::Jobs() const {
  std::vector<PipelineConfig> jobs;
  for (SeedMethod method : methods) {
    for (int iteration : iterations) {
      for (Assembly assembly : assemblies) {
        for (LexiconLevel level : levels) {
          PipelineConfig config = base;
          config.method = method;
          config.iterations = iteration;
          config.assembly = assembly;
          config.level = level;
          jobs.push_back(std::move(config));
        }
      }
    }
  }
  return jobs;
}

std::vector<SweepRow> RunSweep(const LexicalKB &kb, const SweepSpec &spec,
                               const std::optional<EvalCorpus> &corpus,
                               const std::optional<std::filesystem::path> &out,
                               size_t workers) {
  spec.Validate();
  const std::vector<PipelineConfig> jobs = spec.Jobs();
  GraphCache graphs(kb);
  for (Assembly assembly : spec.assemblies) graphs.Prepare(assembly);
  if (out) std::filesystem::create_directories(*out);

  std::vector<SweepRow> rows(jobs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      SweepRow &row = rows[i];
      row.config = jobs[i];
      row.name = std::string(SeedMethodName(jobs[i].method)) + " " +
                 jobs[i].Name();
      try {
        PipelineResult result = RunPipeline(graphs, jobs[i]);
        const PolarityLexicon &lexicon = result.lexicon;
        row.size = lexicon.size();
        row.positives = lexicon.CountPolarity(Polarity::kPositive);
        row.negatives = lexicon.CountPolarity(Polarity::kNegative);
        if (out) {
          row.lexicon_path = *out / (std::string(SeedMethodName(jobs[i].method)) +
                                     "_" + jobs[i].Name() + ".tsv");
          std::ofstream file(row.lexicon_path, std::ios::binary);
          if (!file) {
            throw Error(ErrorKind::kInput, kModule,
                        "cannot write " + row.lexicon_path.string());
          }
          WriteLexicon(lexicon, file);
        }
        if (corpus) {
          const MatchOptions options = MatchFor(lexicon);
          const double threshold = TuneThreshold(corpus->dev, lexicon, options);
          row.report =
              ClassifyDocuments(corpus->test, lexicon, threshold, options);
        }
        row.ok = true;
      } catch (const std::exception &e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };
  const size_t threads = std::max<size_t>(1, std::min(workers, jobs.size()));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (std::thread &thread : pool) thread.join();

  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow &a, const SweepRow &b) {
                     if (a.ok != b.ok) return a.ok;
                     const double fa = a.report ? a.report->MacroF1() : 0.0;
                     const double fb = b.report ? b.report->MacroF1() : 0.0;
                     if (fa != fb) return fa > fb;
                     return a.name < b.name;
                   });
  return rows;
}

std::string FormatSweepTable(const std::vector<SweepRow> &rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-12s %8s %8s %8s %9s %9s %9s %10s\n",
                "config", "size", "pos", "neg", "accuracy", "pos_f1",
                "neg_f1", "macro_f1");
  out << line;
  for (const SweepRow &row : rows) {
    if (!row.ok) {
      out << row.name << "  FAILED: " << row.error << '\n';
      continue;
    }
    if (row.report) {
      std::snprintf(line, sizeof(line),
                    "%-12s %8zu %8zu %8zu %9.4f %9.4f %9.4f %10.4f\n",
                    row.name.c_str(), row.size, row.positives, row.negatives,
                    row.report->accuracy, row.report->positive.f1,
                    row.report->negative.f1, row.report->MacroF1());
    } else {
      std::snprintf(line, sizeof(line), "%-12s %8zu %8zu %8zu %9s %9s %9s %10s\n",
                    row.name.c_str(), row.size, row.positives, row.negatives,
                    "-", "-", "-", "-");
    }
    out << line;
  }
  return out.str();
}

}  // namespace lexirank
