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

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lexirank/error.h"
#include "test_util.h"

namespace lexirank {
namespace {

SynsetId Adj(uint32_t offset) { return {PartOfSpeech::kAdjective, offset}; }

std::string Serialize(const PolarityLexicon &lexicon) {
  std::ostringstream out;
  WriteLexicon(lexicon, out);
  return out.str();
}

std::vector<SeedWord> ToyWords() {
  return {{"good", PartOfSpeech::kAdjective, Polarity::kPositive},
          {"evil", PartOfSpeech::kAdjective, Polarity::kNegative}};
}

// Documents annotated with toy synsets. Positive documents lean on the
// good/nice/fine/decent side, negative ones on bad/awful/evil.
EvalCorpus ToyCorpus() {
  const std::vector<std::string> pos = {"00000100-a", "00000300-a",
                                        "00000400-a", "00000700-a"};
  const std::vector<std::string> neg = {"00000200-a", "00000500-a",
                                        "00000600-a"};
  auto doc = [](const std::string &id, Polarity gold,
                std::vector<std::string> synsets) {
    Document d{id, {}, gold};
    for (const std::string &s : synsets) {
      d.tokens.push_back({"w", "w", PartOfSpeech::kAdjective, SynsetId::Parse(s)});
    }
    d.tokens.push_back({"the", "the", std::nullopt, std::nullopt});
    return d;
  };
  EvalCorpus corpus;
  for (int i = 0; i < 4; ++i) {
    corpus.dev.push_back(doc("dp" + std::to_string(i), Polarity::kPositive,
                             {pos[i], pos[(i + 1) % 4]}));
    corpus.test.push_back(doc("tp" + std::to_string(i), Polarity::kPositive,
                              {pos[(i + 2) % 4]}));
  }
  for (int i = 0; i < 3; ++i) {
    corpus.dev.push_back(doc("dn" + std::to_string(i), Polarity::kNegative,
                             {neg[i], neg[(i + 1) % 3]}));
    corpus.test.push_back(doc("tn" + std::to_string(i), Polarity::kNegative,
                              {neg[(i + 2) % 3], pos[i]}));
  }
  return corpus;
}

TEST_CASE("config names and metadata") {
  PipelineConfig config;
  config.iterations = 3;
  CHECK(config.Name() == "s03_G1");
  config.level = LexiconLevel::kWord;
  config.assembly = Assembly::kG3;
  config.iterations = 1;
  CHECK(config.Name() == "w01_G3");

  config.method = SeedMethod::kTL;
  config.ppv.damping = 0.7;
  config.seed_words = ToyWords();
  config.policy = ConflictPolicy::kFirstWins;
  PipelineConfig again = PipelineConfig::FromMetadata(config.ToMetadata());
  CHECK(again.ToMetadata() == config.ToMetadata());
  CHECK_THROWS_AS(PipelineConfig::FromMetadata({{"config", "s01_G1"}}), Error);
  CHECK_FALSE(AssemblyFromName("G5"));
}

TEST_CASE("word-level entry expands seed lemmas to all their senses") {
  LexicalKB kb = testing::LoadToyKb();
  SeedSet seeds;
  seeds.positive = {Adj(100)};
  seeds.negative = {Adj(200)};
  SeedSet words = ExpandSeedsToWordSenses(seeds, kb);
  CHECK(words.positive == std::set<SynsetId>{Adj(100), Adj(400)});
  CHECK(words.negative == std::set<SynsetId>{Adj(200), Adj(500)});

  // fine is shared between 400 and 700; 400 also carries good.
  seeds.positive = {Adj(100)};
  seeds.negative = {Adj(700)};
  words = ExpandSeedsToWordSenses(seeds, kb);
  CHECK_FALSE(words.positive.count(Adj(400)));
  CHECK_FALSE(words.negative.count(Adj(400)));
}

TEST_CASE("toy pipeline is deterministic and reproducible from metadata") {
  LexicalKB kb = testing::LoadToyKb();
  GraphCache graphs(kb);
  PipelineConfig config;
  config.iterations = 1;
  PipelineResult first = RunPipeline(graphs, config);
  PipelineResult second = RunPipeline(graphs, config);
  const std::string text = Serialize(first.lexicon);
  CHECK(text == Serialize(second.lexicon));
  CHECK(first.lexicon.MetadataValue("config") == "s01_G1");
  CHECK(first.lexicon.MetadataValue("kb_digest") == kb.provenance().digest);
  CHECK(first.lexicon.MetadataValue("seed_conflicts_removed") == "1");

  std::istringstream in(text);
  PolarityLexicon read = ReadLexicon(in);
  PipelineConfig recorded = PipelineConfig::FromMetadata(read.metadata());
  GraphCache fresh(kb);
  CHECK(Serialize(RunPipeline(fresh, recorded).lexicon) == text);

  for (Assembly assembly : {Assembly::kG2, Assembly::kG3, Assembly::kG4}) {
    for (LexiconLevel level : {LexiconLevel::kSynset, LexiconLevel::kWord}) {
      PipelineConfig other = config;
      other.assembly = assembly;
      other.level = level;
      PipelineResult result = RunPipeline(graphs, other);
      CHECK(result.lexicon.level() == level);
      CHECK_FALSE(result.lexicon.empty());
      std::istringstream again(Serialize(result.lexicon));
      PolarityLexicon reread = ReadLexicon(again);
      CHECK(Serialize(RunPipeline(graphs, PipelineConfig::FromMetadata(
                                              reread.metadata()))
                          .lexicon) == Serialize(result.lexicon));
      if (assembly == Assembly::kG2) CHECK(result.warnings.size() == 1);
    }
  }
}

TEST_CASE("writing the lexicon file") {
  LexicalKB kb = testing::LoadToyKb();
  GraphCache graphs(kb);
  PipelineConfig config;
  auto path = std::filesystem::temp_directory_path() / "lexirank_pipeline_test.tsv";
  PipelineResult result = RunPipelineToFile(graphs, config, path);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == Serialize(result.lexicon));
  std::filesystem::remove(path);
}

TEST_CASE("sweep job count") {
  SweepSpec spec;
  spec.methods = {SeedMethod::kAG, SeedMethod::kTL};
  spec.iterations = {0, 1};
  spec.assemblies = {Assembly::kG1, Assembly::kG3};
  spec.levels = {LexiconLevel::kSynset};
  CHECK(spec.JobCount() == 8);
  CHECK(spec.Jobs().size() == 8);
  spec.levels.clear();
  CHECK_THROWS_AS(spec.Validate(), Error);
  spec.levels = {LexiconLevel::kSynset};
  spec.iterations = {16};
  CHECK_THROWS_AS(spec.Validate(), Error);
}

TEST_CASE("toy sweep ranking matches a manual evaluation") {
  LexicalKB kb = testing::LoadToyKb();
  SweepSpec spec;
  spec.iterations = {0, 1};
  spec.base.seed_words = ToyWords();
  EvalCorpus corpus = ToyCorpus();
  auto dir = std::filesystem::temp_directory_path() / "lexirank_sweep_test";
  std::filesystem::remove_all(dir);
  std::vector<SweepRow> rows = RunSweep(kb, spec, corpus, dir, 3);
  REQUIRE(rows.size() == 8);

  double best = -1.0;
  for (const PipelineConfig &job : spec.Jobs()) {
    GraphCache graphs(kb);
    PolarityLexicon lex = RunPipeline(graphs, job).lexicon;
    const double t = TuneThreshold(corpus.dev, lex, MatchFor(lex));
    EvalReport report = ClassifyDocuments(corpus.test, lex, t, MatchFor(lex));
    best = std::max(best, report.MacroF1());
    const std::string name =
        std::string(SeedMethodName(job.method)) + " " + job.Name();
    auto row = std::find_if(rows.begin(), rows.end(),
                            [&](const SweepRow &r) { return r.name == name; });
    REQUIRE(row != rows.end());
    REQUIRE(row->ok);
    CHECK(row->report->MacroF1() == report.MacroF1());
    CHECK(row->size == lex.size());
    std::ifstream file(row->lexicon_path);
    std::stringstream text;
    text << file.rdbuf();
    CHECK(text.str() == Serialize(lex));
  }
  CHECK(rows.front().report->MacroF1() == best);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i - 1].report->MacroF1() >= rows[i].report->MacroF1());
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("failed sweep jobs are recorded and the sweep continues") {
  LexicalKB kb = testing::LoadToyKb();
  SweepSpec spec;
  spec.iterations = {0};
  spec.assemblies = {Assembly::kG3};
  // The default TL seed words do not exist in the toy knowledge base.
  std::vector<SweepRow> rows = RunSweep(kb, spec, std::nullopt, std::nullopt, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ok);
  CHECK(rows[0].name == "AG s00_G3");
  CHECK_FALSE(rows[1].ok);
  CHECK(rows[1].error.find("seed lemma") != std::string::npos);
  const std::string table = FormatSweepTable(rows);
  CHECK(table.find("TL s00_G3  FAILED") != std::string::npos);
}

TEST_CASE("command line usage errors exit with status 1") {
  const char *cli = std::getenv("LEXIRANK_CLI");
  if (cli == nullptr) {
    MESSAGE("LEXIRANK_CLI not set; skipping");
    return;
  }
  const std::string kb = testing::DataPath("toy_kb.tsv").string();
  auto status = [](const std::string &command) {
    int raw = std::system((command + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  const std::string base = std::string(cli) + " ";
  CHECK(status(base + "lexicon --kb " + kb + " --variant G7") == 1);
  CHECK(status(base + "lexicon --kb " + kb + " --iterations 99") == 1);
  CHECK(status(base + "frobnicate") == 1);
  CHECK(status(base + "parse --kb /nonexistent") == 2);
  CHECK(status(base + "lexicon --kb " + kb + " --variant G1 --method TL") == 2);
  CHECK(status(base + "lexicon --kb " + kb + " --variant G1 --max-iter 2") == 3);
  CHECK(status(base + "lexicon --kb " + kb + " --variant G1 --max-iter 2 --accept-unconverged --out /dev/null") == 0);
  CHECK(status(base + "--help") == 0);
}

}  // namespace
}  // namespace lexirank
