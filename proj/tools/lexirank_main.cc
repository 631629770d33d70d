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

// Command line front end.
//
// Sample usage:
//   lexirank lexicon --kb /data/wordnet-3.0 --method TL --iterations 4 \
//       --variant G1 --level synset --out tl_s04_G1.tsv
//   lexirank eval-docs --lexicon tl_s04_G1.tsv --dev dev.tsv --test test.tsv
//   lexirank sweep --kb /data/wordnet-3.0 --method AG,TL --iterations 0-5 \
//       --variant G1,G3 --level synset,word --dev dev.tsv --test test.tsv \
//       --out sweep/

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lexirank/error.h"
#include "lexirank/eval.h"
#include "lexirank/graph.h"
#include "lexirank/lexicon.h"
#include "lexirank/lkb.h"
#include "lexirank/pipeline.h"
#include "lexirank/ppv.h"
#include "lexirank/seedgen.h"
#include "lexirank/text.h"

namespace {

using namespace lexirank;

struct KbOptions {
  std::string path;
  std::string format = "auto";
};

struct PpvOptions {
  double damping = 0.85;
  double tolerance = 1e-9;
  int max_iterations = 1000;
  bool accept_unconverged = false;

  PpvConfig Config() const {
    return {damping, tolerance, max_iterations, accept_unconverged};
  }
};

struct SeedOptions {
  std::string method = "AG";
  int iterations = 1;
  std::string conflict_policy = "drop";
  std::string seed_words;
  std::vector<std::string> relations;
  bool skip_unresolved = false;
};

// Echoed with errors so a failure names its configuration.
std::string g_config_echo;

Error UsageError(const std::string &message) {
  return Error(ErrorKind::kUsage, "cli", message);
}

void AddKbOptions(CLI::App *app, KbOptions &kb) {
  app->add_option("--kb", kb.path,
                  "Knowledge base: WordNet dict directory or tsv-graph file "
                  "(default $LEXIRANK_DATA)");
  app->add_option("--format", kb.format, "auto, wordnet-db or tsv-graph")
      ->check(CLI::IsMember({"auto", "wordnet-db", "tsv-graph"}));
}

void AddPpvOptions(CLI::App *app, PpvOptions &ppv) {
  app->add_option("--damping", ppv.damping, "PageRank damping factor c");
  app->add_option("--tolerance", ppv.tolerance,
                  "L1 distance between iterates that stops the solver");
  app->add_option("--max-iter", ppv.max_iterations, "Iteration cap");
  app->add_flag("--accept-unconverged", ppv.accept_unconverged,
                "Keep the last iterate instead of failing");
}

void AddSeedOptions(CLI::App *app, SeedOptions &seeds) {
  app->add_option("--method", seeds.method, "Seed generation method")
      ->check(CLI::IsMember({"AG", "TL"}));
  app->add_option("--iterations", seeds.iterations, "Seed expansion depth")
      ->check(CLI::Range(0, kMaxSeedIterations));
  app->add_option("--conflict-policy", seeds.conflict_policy,
                  "drop or first-wins")
      ->check(CLI::IsMember({"drop", "first-wins"}));
  app->add_option("--seed-words", seeds.seed_words,
                  "TL seed words file: '<lemma[#pos]> TAB pos|neg' lines");
  app->add_option("--relations", seeds.relations,
                  "AG expansion relations (comma separated)")
      ->delimiter(',');
  app->add_flag("--skip-unresolved", seeds.skip_unresolved,
                "Warn about and skip seed words missing from the KB");
}

LexicalKB LoadKb(const KbOptions &options) {
  std::string path = options.path;
  if (path.empty()) {
    if (const char *env = std::getenv("LEXIRANK_DATA")) path = env;
  }
  if (path.empty()) throw UsageError("no --kb given and LEXIRANK_DATA unset");
  KbFormat format = options.format == "auto"
                        ? DetectKbFormat(path)
                        : *KbFormatFromName(options.format);
  auto start = std::chrono::steady_clock::now();
  LexicalKB kb = ParseLkb(path, format);
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cerr << "loaded " << path << " (" << KbFormatName(format) << "): "
            << kb.size() << " synsets, " << kb.senses().size() << " senses, "
            << kb.relations().size() << " relations in " << elapsed << "s\n";
  const ParseReport &report = kb.report();
  if (report.skipped_lines || report.unknown_relation_labels) {
    std::cerr << "warning: " << report.skipped_lines
              << " unparseable lines, " << report.unknown_relation_labels
              << " unknown relation labels\n";
  }
  return kb;
}

std::vector<RelationType> ParseRelations(const std::vector<std::string> &names) {
  if (names.empty()) return DefaultAgRelations();
  std::vector<RelationType> relations;
  for (const std::string &name : names) {
    auto type = RelationTypeFromName(name);
    if (!type) throw UsageError("unknown relation '" + name + "'");
    relations.push_back(*type);
  }
  return relations;
}

std::vector<SeedWord> LoadSeedWords(const std::string &path) {
  if (path.empty()) return DefaultTlSeedWords();
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInput, "cli", "cannot open " + path);
  return ReadSeedWords(in);
}

template <typename T, typename Reader>
T ReadFile(const std::string &path, Reader reader) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cli", "cannot open " + path);
  return reader(in);
}

// Runs `write` against --out, or stdout when no path was given.
void WriteOutput(const std::string &path,
                 const std::function<void(std::ostream &)> &write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInput, "cli", "cannot write " + path);
  write(out);
}

std::vector<int> ParseIterationList(const std::string &text) {
  std::vector<int> values;
  for (std::string_view item : Split(text, ',')) {
    size_t dash = item.find('-');
    if (dash != std::string_view::npos) {
      auto low = ParseInt(item.substr(0, dash));
      auto high = ParseInt(item.substr(dash + 1));
      if (!low || !high || *low > *high) {
        throw UsageError("bad iteration range '" + std::string(item) + "'");
      }
      for (int i = *low; i <= *high; ++i) values.push_back(i);
    } else {
      auto value = ParseInt(item);
      if (!value) throw UsageError("bad iteration '" + std::string(item) + "'");
      values.push_back(*value);
    }
  }
  return values;
}

std::vector<std::string> SplitList(const std::string &text) {
  std::vector<std::string> items;
  for (std::string_view item : Split(text, ',')) {
    if (!item.empty()) items.emplace_back(item);
  }
  return items;
}

PipelineConfig MakePipelineConfig(const SeedOptions &seeds,
                                  const PpvOptions &ppv,
                                  const std::string &variant,
                                  const std::string &level) {
  PipelineConfig config;
  config.method = *SeedMethodFromName(seeds.method);
  config.iterations = seeds.iterations;
  auto assembly = AssemblyFromName(variant);
  if (!assembly) throw UsageError("unknown variant '" + variant + "'");
  config.assembly = *assembly;
  auto lexicon_level = LexiconLevelFromName(level);
  if (!lexicon_level) throw UsageError("unknown level '" + level + "'");
  config.level = *lexicon_level;
  config.policy = *ConflictPolicyFromName(seeds.conflict_policy);
  config.ppv = ppv.Config();
  config.ag_relations = ParseRelations(seeds.relations);
  config.seed_words = LoadSeedWords(seeds.seed_words);
  config.skip_unresolved = seeds.skip_unresolved;
  return config;
}

int Run(int argc, char **argv) {
  CLI::App app{"Polarity lexicon induction with personalized PageRank"};
  app.require_subcommand(1);

  KbOptions kb_options;
  PpvOptions ppv_options;
  SeedOptions seed_options;
  std::string out;
  std::string variant;
  std::string level = "synset";
  std::string lexicon_path;
  std::string dev_path;
  std::string test_path;
  std::string gold_path;
  std::string seeds_path;
  std::string polarity = "pos";
  bool surface_fallback = false;
  size_t jobs = std::max(1u, std::thread::hardware_concurrency());

  auto *parse = app.add_subcommand("parse", "Parse a knowledge base");
  AddKbOptions(parse, kb_options);
  parse->add_option("--out", out, "Write the KB as tsv-graph");

  auto *graph = app.add_subcommand("graph", "Project a graph variant");
  AddKbOptions(graph, kb_options);
  graph->add_option("--variant", variant, "G1SYN, G1ANT, G2, G3 or G4")
      ->required()
      ->check(CLI::IsMember({"G1SYN", "G1ANT", "G2", "G3", "G4"}));
  graph->add_option("--out", out, "Write the edge list");

  auto *seeds = app.add_subcommand("seeds", "Generate a seed set");
  AddKbOptions(seeds, kb_options);
  AddSeedOptions(seeds, seed_options);
  seeds->add_option("--out", out, "Seed file");

  auto *propagate =
      app.add_subcommand("propagate", "Personalized PageRank from seeds");
  AddKbOptions(propagate, kb_options);
  AddPpvOptions(propagate, ppv_options);
  propagate->add_option("--variant", variant, "G1SYN, G1ANT, G2, G3 or G4")
      ->required()
      ->check(CLI::IsMember({"G1SYN", "G1ANT", "G2", "G3", "G4"}));
  propagate->add_option("--seeds", seeds_path, "Seed file")->required();
  propagate->add_option("--polarity", polarity, "Which seeds to start from")
      ->check(CLI::IsMember({"pos", "neg"}));
  propagate->add_option("--out", out, "Rank vector file");

  auto *lexicon = app.add_subcommand("lexicon", "Induce a polarity lexicon");
  AddKbOptions(lexicon, kb_options);
  AddSeedOptions(lexicon, seed_options);
  AddPpvOptions(lexicon, ppv_options);
  lexicon->add_option("--variant", variant, "G1, G2, G3 or G4")
      ->required()
      ->check(CLI::IsMember({"G1", "G2", "G3", "G4"}));
  lexicon->add_option("--level", level, "synset or word")
      ->check(CLI::IsMember({"synset", "word"}));
  lexicon->add_option("--out", out, "Lexicon file");

  auto *convert =
      app.add_subcommand("convert", "Convert between synset and word level");
  AddKbOptions(convert, kb_options);
  convert->add_option("--lexicon", lexicon_path, "Input lexicon")->required();
  convert->add_option("--level", level, "Target level: synset or word")
      ->required()
      ->check(CLI::IsMember({"synset", "word"}));
  convert->add_option("--out", out, "Output lexicon");

  auto *eval_docs =
      app.add_subcommand("eval-docs", "Average-ratio document classification");
  eval_docs->add_option("--lexicon", lexicon_path, "Lexicon")->required();
  eval_docs->add_option("--dev", dev_path, "Dev corpus")->required();
  eval_docs->add_option("--test", test_path, "Test corpus")->required();
  eval_docs->add_flag("--surface-fallback", surface_fallback,
                      "Match surface forms when the lemma misses");
  eval_docs->add_option("--out", out, "Report file");

  auto *eval_phrases =
      app.add_subcommand("eval-phrases", "Negative-dominant phrase rule");
  eval_phrases->add_option("--lexicon", lexicon_path, "Lexicon")->required();
  eval_phrases->add_option("--test", test_path, "Phrase corpus")->required();
  eval_phrases->add_flag("--surface-fallback", surface_fallback,
                         "Match surface forms when the lemma misses");
  eval_phrases->add_option("--out", out, "Report file");

  auto *eval_intrinsic =
      app.add_subcommand("eval-intrinsic", "Agreement with a gold lexicon");
  eval_intrinsic->add_option("--lexicon", lexicon_path, "Word lexicon")
      ->required();
  eval_intrinsic->add_option("--gold", gold_path, "Gold word lexicon")
      ->required();
  eval_intrinsic->add_option("--out", out, "Report file");

  std::string sweep_methods = "AG,TL";
  std::string sweep_iterations = "0-2";
  std::string sweep_variants = "G1,G3";
  std::string sweep_levels = "synset";
  auto *sweep = app.add_subcommand("sweep", "Run a configuration grid");
  AddKbOptions(sweep, kb_options);
  AddPpvOptions(sweep, ppv_options);
  sweep->add_option("--method", sweep_methods, "Methods, e.g. AG,TL");
  sweep->add_option("--iterations", sweep_iterations, "e.g. 0-5 or 1,3,5");
  sweep->add_option("--variant", sweep_variants, "e.g. G1,G3");
  sweep->add_option("--level", sweep_levels, "e.g. synset,word");
  sweep->add_option("--conflict-policy", seed_options.conflict_policy,
                    "drop or first-wins")
      ->check(CLI::IsMember({"drop", "first-wins"}));
  sweep->add_option("--seed-words", seed_options.seed_words, "TL seed words");
  sweep->add_option("--relations", seed_options.relations,
                    "AG expansion relations")
      ->delimiter(',');
  sweep->add_flag("--skip-unresolved", seed_options.skip_unresolved,
                  "Skip seed words missing from the KB");
  sweep->add_option("--dev", dev_path, "Dev corpus");
  sweep->add_option("--test", test_path, "Test corpus");
  sweep->add_option("--out", out, "Directory for lexicons and results.tsv");
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  if (parse->parsed()) {
    LexicalKB kb = LoadKb(kb_options);
    std::cout << "synsets=" << kb.size() << '\n'
              << "senses=" << kb.senses().size() << '\n'
              << "relations=" << kb.relations().size() << '\n'
              << "skipped_lines=" << kb.report().skipped_lines << '\n'
              << "unknown_relation_labels="
              << kb.report().unknown_relation_labels << '\n'
              << "self_loops=" << kb.report().self_loops << '\n'
              << "digest=" << kb.provenance().digest << '\n';
    for (int t = 0; t < kNumRelationTypes; ++t) {
      auto type = static_cast<RelationType>(t);
      std::cout << "relation." << RelationTypeName(type) << '='
                << kb.CountRelations(type) << '\n';
    }
    if (!out.empty()) {
      WriteOutput(out, [&](std::ostream &os) { WriteTsvGraph(kb, os); });
    }
  } else if (graph->parsed()) {
    LexicalKB kb = LoadKb(kb_options);
    PropagationGraph g = BuildGraph(kb, *GraphVariantFromName(variant));
    size_t isolated = 0;
    size_t max_degree = 0;
    for (size_t i = 0; i < g.num_nodes(); ++i) {
      isolated += g.degree(i) == 0;
      max_degree = std::max(max_degree, g.degree(i));
    }
    if (g.gloss_links_absent()) {
      std::cerr << "warning: no gloss-link relations; G2 equals G3\n";
    }
    std::cerr << "variant=" << variant << " nodes=" << g.num_nodes()
              << " edges=" << g.num_edges() << " isolated=" << isolated
              << " max_degree=" << max_degree << '\n';
    if (!out.empty()) {
      WriteOutput(out, [&](std::ostream &os) {
        for (const auto &[a, b] : g.Edges()) {
          os << g.nodes().id(a).ToString() << '\t'
             << g.nodes().id(b).ToString() << '\n';
        }
      });
    }
  } else if (seeds->parsed()) {
    LexicalKB kb = LoadKb(kb_options);
    const ConflictPolicy policy =
        *ConflictPolicyFromName(seed_options.conflict_policy);
    SeedSet set =
        seed_options.method == "AG"
            ? AgSeeds(kb, seed_options.iterations,
                      ParseRelations(seed_options.relations), policy)
            : TlSeeds(kb, seed_options.iterations,
                      LoadSeedWords(seed_options.seed_words), policy,
                      seed_options.skip_unresolved);
    for (const std::string &lemma : set.skipped_lemmas) {
      std::cerr << "warning: seed lemma " << lemma << " skipped\n";
    }
    std::cerr << "positive=" << set.positive.size()
              << " negative=" << set.negative.size()
              << " conflicts_removed=" << set.conflicts_removed << '\n';
    WriteOutput(out, [&](std::ostream &os) { WriteSeedSet(set, os); });
  } else if (propagate->parsed()) {
    LexicalKB kb = LoadKb(kb_options);
    PropagationGraph g = BuildGraph(kb, *GraphVariantFromName(variant));
    SeedSet set = ReadFile<SeedSet>(
        seeds_path, [](std::istream &in) { return ReadSeedSet(in); });
    const auto &chosen = polarity == "pos" ? set.positive : set.negative;
    std::vector<SynsetId> seed_list(chosen.begin(), chosen.end());
    PersonalizationVector v = MakePersonalization(g, seed_list);
    if (v.unmapped_seeds > 0) {
      std::cerr << "warning: " << v.unmapped_seeds << " seeds not in graph\n";
    }
    const PpvConfig config = ppv_options.Config();
    auto start = std::chrono::steady_clock::now();
    RankVector ranks = PageRank(g, v, config);
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cerr << "iterations=" << ranks.iterations_run
              << " residual=" << ranks.residual
              << " converged=" << (ranks.converged ? "yes" : "no")
              << " seconds=" << elapsed << '\n';
    WriteOutput(out, [&](std::ostream &os) {
      WriteRankVector(ranks,
                      {{"graph", variant},
                       {"polarity", polarity},
                       {"damping", FormatShortest(config.damping)},
                       {"tolerance", FormatShortest(config.tolerance)},
                       {"max_iterations", std::to_string(config.max_iterations)},
                       {"seed_digest", HexDigest([&] {
                          std::string all;
                          for (SynsetId id : seed_list) all += id.ToString();
                          return all;
                        }())},
                       {"iterations_run", std::to_string(ranks.iterations_run)},
                       {"residual", FormatScore(ranks.residual)}},
                      os);
    });
  } else if (lexicon->parsed()) {
    PipelineConfig config =
        MakePipelineConfig(seed_options, ppv_options, variant, level);
    g_config_echo = std::string(SeedMethodName(config.method)) + " " +
                    config.Name();
    LexicalKB kb = LoadKb(kb_options);
    GraphCache graphs(kb);
    auto start = std::chrono::steady_clock::now();
    PipelineResult result = RunPipeline(graphs, config);
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    for (const std::string &warning : result.warnings) {
      std::cerr << "warning: " << warning << '\n';
    }
    for (const auto &[key, value] : result.lexicon.metadata()) {
      if (key.rfind("run.", 0) == 0) std::cerr << key << ": " << value << '\n';
    }
    std::cerr << g_config_echo << ": " << result.lexicon.size()
              << " entries in " << elapsed << "s\n";
    WriteOutput(out,
                [&](std::ostream &os) { WriteLexicon(result.lexicon, os); });
  } else if (convert->parsed()) {
    LexicalKB kb = LoadKb(kb_options);
    PolarityLexicon input = ReadFile<PolarityLexicon>(
        lexicon_path, [](std::istream &in) { return ReadLexicon(in); });
    PolarityLexicon output;
    if (level == "word") {
      output = SynsetToWord(input, kb);
    } else {
      WordToSynsetResult result = WordToSynset(input, kb);
      if (result.skipped_words > 0) {
        std::cerr << "warning: " << result.skipped_words
                  << " words without a sense skipped\n";
      }
      output = std::move(result.lexicon);
    }
    WriteOutput(out, [&](std::ostream &os) { WriteLexicon(output, os); });
  } else if (eval_docs->parsed()) {
    PolarityLexicon lex = ReadFile<PolarityLexicon>(
        lexicon_path, [](std::istream &in) { return ReadLexicon(in); });
    auto dev = ReadFile<std::vector<Document>>(
        dev_path, [](std::istream &in) { return ReadCorpus(in); });
    auto test = ReadFile<std::vector<Document>>(
        test_path, [](std::istream &in) { return ReadCorpus(in); });
    MatchOptions options = MatchFor(lex);
    options.surface_fallback = surface_fallback;
    const double threshold = TuneThreshold(dev, lex, options);
    EvalReport report = ClassifyDocuments(test, lex, threshold, options);
    WriteOutput(out, [&](std::ostream &os) {
      os << FormatReport(report, lexicon_path);
    });
  } else if (eval_phrases->parsed()) {
    PolarityLexicon lex = ReadFile<PolarityLexicon>(
        lexicon_path, [](std::istream &in) { return ReadLexicon(in); });
    auto phrases = ReadFile<std::vector<Document>>(
        test_path, [](std::istream &in) { return ReadCorpus(in); });
    MatchOptions options = MatchFor(lex);
    options.surface_fallback = surface_fallback;
    EvalReport report = ClassifyPhrases(phrases, lex, options);
    WriteOutput(out, [&](std::ostream &os) {
      os << FormatReport(report, lexicon_path);
    });
  } else if (eval_intrinsic->parsed()) {
    PolarityLexicon lex = ReadFile<PolarityLexicon>(
        lexicon_path, [](std::istream &in) { return ReadLexicon(in); });
    PolarityLexicon gold = ReadFile<PolarityLexicon>(
        gold_path, [](std::istream &in) { return ReadLexicon(in); });
    EvalReport report = IntrinsicEval(lex, gold);
    WriteOutput(out, [&](std::ostream &os) {
      os << FormatReport(report, lexicon_path);
    });
  } else if (sweep->parsed()) {
    SweepSpec spec;
    spec.methods.clear();
    for (const std::string &name : SplitList(sweep_methods)) {
      auto method = SeedMethodFromName(name);
      if (!method) throw UsageError("unknown method '" + name + "'");
      spec.methods.push_back(*method);
    }
    spec.iterations = ParseIterationList(sweep_iterations);
    spec.assemblies.clear();
    for (const std::string &name : SplitList(sweep_variants)) {
      auto assembly = AssemblyFromName(name);
      if (!assembly) throw UsageError("unknown variant '" + name + "'");
      spec.assemblies.push_back(*assembly);
    }
    spec.levels.clear();
    for (const std::string &name : SplitList(sweep_levels)) {
      auto lexicon_level = LexiconLevelFromName(name);
      if (!lexicon_level) throw UsageError("unknown level '" + name + "'");
      spec.levels.push_back(*lexicon_level);
    }
    spec.base = MakePipelineConfig(seed_options, ppv_options, "G1", "synset");
    spec.Validate();
    if (dev_path.empty() != test_path.empty()) {
      throw UsageError("--dev and --test go together");
    }
    std::cerr << "sweep: " << spec.JobCount() << " jobs on " << jobs
              << " workers\n";

    LexicalKB kb = LoadKb(kb_options);
    std::optional<EvalCorpus> corpus;
    if (!dev_path.empty()) {
      corpus = EvalCorpus{
          ReadFile<std::vector<Document>>(
              dev_path, [](std::istream &in) { return ReadCorpus(in); }),
          ReadFile<std::vector<Document>>(
              test_path, [](std::istream &in) { return ReadCorpus(in); })};
    }
    std::optional<std::filesystem::path> out_dir;
    if (!out.empty()) out_dir = out;
    auto start = std::chrono::steady_clock::now();
    std::vector<SweepRow> rows = RunSweep(kb, spec, corpus, out_dir, jobs);
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    const std::string table = FormatSweepTable(rows);
    std::cout << table;
    if (out_dir) {
      std::ofstream results(*out_dir / "results.tsv", std::ios::binary);
      results << table;
    }
    size_t failed = 0;
    for (const SweepRow &row : rows) failed += !row.ok;
    std::cerr << "sweep: " << rows.size() << " rows, " << failed
              << " failed, " << elapsed << "s\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  try {
    return Run(argc, argv);
  } catch (const lexirank::Error &e) {
    std::cerr << "error [" << e.module() << ", "
              << lexirank::ErrorKindName(e.kind()) << "]";
    if (!g_config_echo.empty()) std::cerr << " (" << g_config_echo << ")";
    std::cerr << ": " << e.what() << '\n';
    return lexirank::ExitCodeFor(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
