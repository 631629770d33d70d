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

// Python bindings. Synset ids cross the boundary as their canonical
// "<offset>-<pos>" strings and enumerations as their command-line names.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <fstream>
#include <sstream>
#include <thread>

#include "lexirank/error.h"
#include "lexirank/eval.h"
#include "lexirank/graph.h"
#include "lexirank/lexicon.h"
#include "lexirank/lkb.h"
#include "lexirank/pipeline.h"
#include "lexirank/ppv.h"
#include "lexirank/seedgen.h"

namespace py = pybind11;

namespace lexirank {
namespace {

[[noreturn]] void BadArgument(const std::string &message) {
  throw Error(ErrorKind::kUsage, "python", message);
}

template <typename T>
T Named(std::optional<T> value, const std::string &what,
        const std::string &name) {
  if (!value) BadArgument("unknown " + what + " '" + name + "'");
  return *value;
}

SynsetId ToId(const std::string &text) {
  return Named(SynsetId::Parse(text), "synset id", text);
}

PartOfSpeech ToPos(const std::string &text) {
  if (text.size() != 1) BadArgument("part of speech must be one letter");
  return Named(PosFromChar(text[0]), "part of speech", text);
}

std::vector<std::string> IdStrings(const std::set<SynsetId> &ids) {
  std::vector<std::string> out;
  for (SynsetId id : ids) out.push_back(id.ToString());
  return out;
}

std::vector<SynsetId> ToIds(const std::vector<std::string> &ids) {
  std::vector<SynsetId> out;
  for (const std::string &id : ids) out.push_back(ToId(id));
  return out;
}

std::vector<RelationType> ToRelations(const std::vector<std::string> &names) {
  std::vector<RelationType> out;
  for (const std::string &name : names) {
    out.push_back(Named(RelationTypeFromName(name), "relation", name));
  }
  return out;
}

PpvConfig MakePpv(double damping, double tolerance, int max_iterations,
                  bool accept_unconverged) {
  PpvConfig config;
  config.damping = damping;
  config.tolerance = tolerance;
  config.max_iterations = max_iterations;
  config.accept_unconverged = accept_unconverged;
  return config;
}

std::vector<SeedWord> ToSeedWords(
    const std::vector<std::tuple<std::string, std::string, std::string>>
        &words) {
  std::vector<SeedWord> out;
  for (const auto &[lemma, pos, polarity] : words) {
    out.push_back({NormalizeLemma(lemma), ToPos(pos),
                   Named(PolarityFromName(polarity), "polarity", polarity)});
  }
  return out;
}

SeedSet MakeSeedSet(const std::vector<std::string> &positive,
                    const std::vector<std::string> &negative) {
  SeedSet seeds;
  for (const std::string &id : positive) seeds.positive.insert(ToId(id));
  for (const std::string &id : negative) seeds.negative.insert(ToId(id));
  return seeds;
}

std::vector<Document> LoadCorpus(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInput, "eval", "cannot read " + path.string());
  return ReadCorpus(in);
}

}  // namespace
}  // namespace lexirank

PYBIND11_MODULE(_lexirank, m) {
  using namespace lexirank;
  m.doc() = "Polarity lexicon induction with personalized PageRank.";

  static py::handle error = py::exception<Error>(m, "LexirankError",
                                                 PyExc_RuntimeError)
                                  .release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      py::gil_scoped_acquire acquire;
      py::object value = py::reinterpret_borrow<py::object>(error)(e.what());
      value.attr("kind") = ErrorKindName(e.kind());
      value.attr("exit_code") = ExitCodeFor(e.kind());
      PyErr_SetObject(error.ptr(), value.ptr());
    }
  });

  // Knowledge base.
  py::class_<LexicalKB>(m, "LexicalKB")
      .def("__len__", &LexicalKB::size)
      .def_property_readonly("synsets", [](const LexicalKB &kb) {
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (const Synset &s : kb.synsets()) out.emplace_back(s.id.ToString(), s.lemmas);
        return out;
      })
      .def_property_readonly("relations", [](const LexicalKB &kb) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const Relation &r : kb.relations()) {
          out.emplace_back(r.source.ToString(), RelationTypeName(r.type),
                           r.target.ToString());
        }
        return out;
      })
      .def_property_readonly("format", [](const LexicalKB &kb) {
        return KbFormatName(kb.provenance().format);
      })
      .def_property_readonly("digest", [](const LexicalKB &kb) {
        return kb.provenance().digest;
      })
      .def_property_readonly("report", [](const LexicalKB &kb) {
        const ParseReport &r = kb.report();
        return py::dict(py::arg("skipped_lines") = r.skipped_lines,
                        py::arg("unknown_relation_labels") = r.unknown_relation_labels,
                        py::arg("self_loops") = r.self_loops,
                        py::arg("duplicate_relations") = r.duplicate_relations);
      })
      .def("count_relations", [](const LexicalKB &kb, const std::string &type) {
        return kb.CountRelations(Named(RelationTypeFromName(type), "relation", type));
      })
      .def("senses_of", [](const LexicalKB &kb, const std::string &lemma,
                           const std::string &pos) {
        std::vector<std::string> out;
        for (SynsetId id : kb.SensesOf(NormalizeLemma(lemma), ToPos(pos))) {
          out.push_back(id.ToString());
        }
        return out;
      }, py::arg("lemma"), py::arg("pos"))
      .def("write_tsv", [](const LexicalKB &kb, const std::filesystem::path &path) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorKind::kInput, "lkb", "cannot write " + path.string());
        WriteTsvGraph(kb, out);
      });

  m.def("parse_lkb", [](const std::filesystem::path &path, const std::string &format) {
    KbFormat kind = format == "auto"
                        ? DetectKbFormat(path)
                        : Named(KbFormatFromName(format), "format", format);
    return ParseLkb(path, kind);
  }, py::arg("path"), py::arg("format") = "auto",
     "Parse a WordNet database directory or a tsv-graph file.");

  // Graphs.
  py::class_<PropagationGraph>(m, "PropagationGraph")
      .def_property_readonly("variant", [](const PropagationGraph &g) {
        return GraphVariantName(g.variant());
      })
      .def_property_readonly("num_nodes", &PropagationGraph::num_nodes)
      .def_property_readonly("num_edges", &PropagationGraph::num_edges)
      .def_property_readonly("gloss_links_absent", &PropagationGraph::gloss_links_absent)
      .def("node_ids", [](const PropagationGraph &g) {
        std::vector<std::string> out;
        for (SynsetId id : g.nodes().ids()) out.push_back(id.ToString());
        return out;
      })
      .def("edges", [](const PropagationGraph &g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [a, b] : g.Edges()) {
          out.emplace_back(g.nodes().id(a).ToString(), g.nodes().id(b).ToString());
        }
        return out;
      })
      .def("degree", [](const PropagationGraph &g, const std::string &id) {
        auto index = g.nodes().Find(ToId(id));
        if (!index) BadArgument("synset " + id + " is not a node");
        return g.degree(*index);
      });

  m.def("build_graph", [](const LexicalKB &kb, const std::string &variant) {
    return BuildGraph(kb, Named(GraphVariantFromName(variant), "variant", variant));
  }, py::arg("kb"), py::arg("variant"));

  // Seeds.
  py::class_<SeedSet>(m, "SeedSet")
      .def(py::init(&MakeSeedSet), py::arg("positive"), py::arg("negative"))
      .def_property_readonly("positive", [](const SeedSet &s) { return IdStrings(s.positive); })
      .def_property_readonly("negative", [](const SeedSet &s) { return IdStrings(s.negative); })
      .def_property_readonly("method", [](const SeedSet &s) { return SeedMethodName(s.method); })
      .def_readonly("iteration", &SeedSet::iteration)
      .def_readonly("conflicts_removed", &SeedSet::conflicts_removed)
      .def_readonly("fixed_point_at", &SeedSet::fixed_point_at)
      .def_readonly("skipped_lemmas", &SeedSet::skipped_lemmas)
      .def("swapped", [](const SeedSet &s) {
        SeedSet out = s;
        std::swap(out.positive, out.negative);
        return out;
      })
      .def("write", [](const SeedSet &s, const std::filesystem::path &path) {
        std::ofstream out(path, std::ios::binary);
        WriteSeedSet(s, out);
      });

  m.def("ag_seeds", [](const LexicalKB &kb, int iterations,
                       std::optional<std::vector<std::string>> relations,
                       const std::string &policy) {
    return AgSeeds(kb, iterations,
                   relations ? ToRelations(*relations) : DefaultAgRelations(),
                   Named(ConflictPolicyFromName(policy), "conflict policy", policy));
  }, py::arg("kb"), py::arg("iterations"), py::arg("relations") = py::none(),
     py::arg("policy") = "drop");

  m.def("tl_seeds", [](const LexicalKB &kb, int iterations,
                       std::optional<std::vector<std::tuple<std::string, std::string, std::string>>> words,
                       const std::string &policy, bool skip_unresolved) {
    return TlSeeds(kb, iterations, words ? ToSeedWords(*words) : DefaultTlSeedWords(),
                   Named(ConflictPolicyFromName(policy), "conflict policy", policy),
                   skip_unresolved);
  }, py::arg("kb"), py::arg("iterations"), py::arg("words") = py::none(),
     py::arg("policy") = "drop", py::arg("skip_unresolved") = false,
     "words: list of (lemma, pos, 'pos'|'neg') tuples.");

  m.def("read_seed_set", [](const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kInput, "seedgen", "cannot read " + path.string());
    return ReadSeedSet(in);
  });

  // PageRank.
  py::class_<RankVector>(m, "RankVector")
      .def_readonly("scores", &RankVector::scores)
      .def_readonly("iterations_run", &RankVector::iterations_run)
      .def_readonly("residual", &RankVector::residual)
      .def_readonly("converged", &RankVector::converged)
      .def("as_dict", [](const RankVector &r) {
        std::map<std::string, double> out;
        for (size_t i = 0; i < r.scores.size(); ++i) out[r.nodes->id(i).ToString()] = r.scores[i];
        return out;
      });

  m.def("make_personalization", [](const PropagationGraph &g,
                                   const std::vector<std::string> &seeds) {
    PersonalizationVector v = MakePersonalization(g, ToIds(seeds));
    return py::make_tuple(v.weights, v.unmapped_seeds);
  }, py::arg("graph"), py::arg("seeds"),
     "Returns (weights, unmapped_seed_count).");

  m.def("pagerank", [](const PropagationGraph &g, std::vector<double> weights,
                       double damping, double tolerance, int max_iterations,
                       bool accept_unconverged) {
    PpvConfig config = MakePpv(damping, tolerance, max_iterations, accept_unconverged);
    config.Validate();
    if (weights.size() != g.num_nodes()) BadArgument("personalization length != node count");
    auto v = PersonalizationVector::FromWeights(std::move(weights));
    py::gil_scoped_release release;
    return PageRank(g, v, config);
  }, py::arg("graph"), py::arg("weights"), py::arg("damping") = 0.85,
     py::arg("tolerance") = 1e-9, py::arg("max_iterations") = 1000,
     py::arg("accept_unconverged") = false);

  m.def("fixed_point_residual", [](const PropagationGraph &g,
                                   const std::vector<double> &weights, double damping,
                                   const std::vector<double> &scores) {
    return FixedPointResidual(g, weights, damping, scores);
  });

  // Lexicons.
  py::class_<PolarityLexicon>(m, "PolarityLexicon")
      .def(py::init([](const std::string &level) {
        return PolarityLexicon(Named(LexiconLevelFromName(level), "level", level));
      }), py::arg("level") = "synset")
      .def_property_readonly("level", [](const PolarityLexicon &l) {
        return LexiconLevelName(l.level());
      })
      .def_property_readonly("entries", &PolarityLexicon::entries)
      .def_property_readonly("metadata", [](const PolarityLexicon &l) { return l.metadata(); })
      .def("__len__", &PolarityLexicon::size)
      .def("__contains__", [](const PolarityLexicon &l, const std::string &key) {
        return l.Score(key).has_value();
      })
      .def("__getitem__", [](const PolarityLexicon &l, const std::string &key) {
        auto score = l.Score(key);
        if (!score) throw py::key_error(key);
        return *score;
      })
      .def("__setitem__", &PolarityLexicon::Set)
      .def("__eq__", [](const PolarityLexicon &a, const PolarityLexicon &b) { return a == b; })
      .def("positives", [](const PolarityLexicon &l) { return l.CountPolarity(Polarity::kPositive); })
      .def("negatives", [](const PolarityLexicon &l) { return l.CountPolarity(Polarity::kNegative); })
      .def("write", [](const PolarityLexicon &l, const std::filesystem::path &path) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorKind::kInput, "lexicon", "cannot write " + path.string());
        WriteLexicon(l, out);
      })
      .def("dumps", [](const PolarityLexicon &l) {
        std::ostringstream out;
        WriteLexicon(l, out);
        return out.str();
      });

  m.def("read_lexicon", [](const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kInput, "lexicon", "cannot read " + path.string());
    return ReadLexicon(in);
  });

  m.def("assemble_g1", [](const PropagationGraph &syn, const PropagationGraph &ant,
                          const SeedSet &seeds, double damping, double tolerance,
                          int max_iterations) {
    return AssembleG1(syn, ant, seeds, MakePpv(damping, tolerance, max_iterations, false));
  }, py::arg("synonymy"), py::arg("antonymy"), py::arg("seeds"),
     py::arg("damping") = 0.85, py::arg("tolerance") = 1e-9,
     py::arg("max_iterations") = 1000);

  m.def("assemble_single", [](const PropagationGraph &g, const SeedSet &seeds,
                              double damping, double tolerance, int max_iterations) {
    return AssembleSingle(g, seeds, MakePpv(damping, tolerance, max_iterations, false));
  }, py::arg("graph"), py::arg("seeds"), py::arg("damping") = 0.85,
     py::arg("tolerance") = 1e-9, py::arg("max_iterations") = 1000);

  m.def("synset_to_word", &SynsetToWord, py::arg("lexicon"), py::arg("kb"));
  m.def("word_to_synset", [](const PolarityLexicon &l, const LexicalKB &kb) {
    WordToSynsetResult result = WordToSynset(l, kb);
    return py::make_tuple(result.lexicon, result.skipped_words);
  }, py::arg("lexicon"), py::arg("kb"), "Returns (lexicon, skipped_word_count).");

  // Evaluation.
  py::class_<Document>(m, "Document")
      .def(py::init([](const std::string &id, const std::string &gold,
                       const std::vector<std::string> &tokens) {
        Document doc;
        doc.id = id;
        doc.gold = Named(PolarityFromName(gold), "polarity", gold);
        for (const std::string &token : tokens) doc.tokens.push_back(ParseToken(token));
        return doc;
      }), py::arg("id"), py::arg("gold"), py::arg("tokens"),
         "tokens: 'surface|lemma|pos[|synset]' strings.")
      .def_readonly("id", &Document::id)
      .def_property_readonly("gold", [](const Document &d) { return PolarityName(d.gold); })
      .def("__len__", [](const Document &d) { return d.tokens.size(); });

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("accuracy", &EvalReport::accuracy)
      .def_readonly("total", &EvalReport::total)
      .def_readonly("threshold", &EvalReport::threshold)
      .def_readonly("intersection", &EvalReport::intersection)
      .def_readonly("confusion", &EvalReport::confusion)
      .def_readonly("untagged", &EvalReport::untagged)
      .def_property_readonly("macro_f1", &EvalReport::MacroF1)
      .def_property_readonly("positive", [](const EvalReport &r) {
        return py::dict(py::arg("precision") = r.positive.precision,
                        py::arg("recall") = r.positive.recall,
                        py::arg("f1") = r.positive.f1);
      })
      .def_property_readonly("negative", [](const EvalReport &r) {
        return py::dict(py::arg("precision") = r.negative.precision,
                        py::arg("recall") = r.negative.recall,
                        py::arg("f1") = r.negative.f1);
      })
      .def("format", &FormatReport, py::arg("name") = "");

  m.def("read_corpus", &LoadCorpus, py::arg("path"));
  auto options = [](const PolarityLexicon &l, bool fallback) {
    MatchOptions o = MatchFor(l);
    o.surface_fallback = fallback;
    return o;
  };
  m.def("avg_ratio", [options](const Document &d, const PolarityLexicon &l, bool fallback) {
    return AvgRatio(d, l, options(l, fallback));
  }, py::arg("document"), py::arg("lexicon"), py::arg("surface_fallback") = false);
  m.def("tune_threshold", [options](const std::vector<Document> &dev,
                                    const PolarityLexicon &l, bool fallback) {
    return TuneThreshold(dev, l, options(l, fallback));
  }, py::arg("dev"), py::arg("lexicon"), py::arg("surface_fallback") = false);
  m.def("classify_documents", [options](const std::vector<Document> &test,
                                        const PolarityLexicon &l, double t, bool fallback) {
    return ClassifyDocuments(test, l, t, options(l, fallback));
  }, py::arg("test"), py::arg("lexicon"), py::arg("threshold"),
     py::arg("surface_fallback") = false);
  m.def("phrase_polarity", [options](const Document &d, const PolarityLexicon &l,
                                     bool fallback) -> std::optional<std::string> {
    auto p = PhrasePolarity(d, l, options(l, fallback));
    if (!p) return std::nullopt;
    return std::string(PolarityName(*p));
  }, py::arg("phrase"), py::arg("lexicon"), py::arg("surface_fallback") = false);
  m.def("classify_phrases", [options](const std::vector<Document> &phrases,
                                      const PolarityLexicon &l, bool fallback) {
    return ClassifyPhrases(phrases, l, options(l, fallback));
  }, py::arg("phrases"), py::arg("lexicon"), py::arg("surface_fallback") = false);
  m.def("intrinsic_eval", &IntrinsicEval, py::arg("lexicon"), py::arg("gold"));

  // Pipeline.
  auto make_config = [](const std::string &method, int iterations,
                        const std::string &variant, const std::string &level,
                        const std::string &policy, double damping, double tolerance,
                        int max_iterations,
                        std::optional<std::vector<std::tuple<std::string, std::string, std::string>>> words,
                        bool skip_unresolved) {
    PipelineConfig config;
    config.method = Named(SeedMethodFromName(method), "method", method);
    config.iterations = iterations;
    config.assembly = Named(AssemblyFromName(variant), "variant", variant);
    config.level = Named(LexiconLevelFromName(level), "level", level);
    config.policy = Named(ConflictPolicyFromName(policy), "conflict policy", policy);
    config.ppv = MakePpv(damping, tolerance, max_iterations, false);
    if (words) config.seed_words = ToSeedWords(*words);
    config.skip_unresolved = skip_unresolved;
    return config;
  };
  m.def("run_pipeline", [make_config](const LexicalKB &kb, const std::string &method,
                                      int iterations, const std::string &variant,
                                      const std::string &level, const std::string &policy,
                                      double damping, double tolerance, int max_iterations,
                                      std::optional<std::vector<std::tuple<std::string, std::string, std::string>>> words,
                                      bool skip_unresolved) {
    PipelineConfig config = make_config(method, iterations, variant, level, policy,
                                        damping, tolerance, max_iterations, words,
                                        skip_unresolved);
    GraphCache graphs(kb);
    PipelineResult result = RunPipeline(graphs, config);
    return py::make_tuple(result.lexicon, result.seeds, result.warnings);
  }, py::arg("kb"), py::arg("method") = "AG", py::arg("iterations") = 1,
     py::arg("variant") = "G1", py::arg("level") = "synset", py::arg("policy") = "drop",
     py::arg("damping") = 0.85, py::arg("tolerance") = 1e-9,
     py::arg("max_iterations") = 1000, py::arg("seed_words") = py::none(),
     py::arg("skip_unresolved") = false,
     "Returns (lexicon, seeds, warnings).");

  m.def("run_sweep", [](const LexicalKB &kb, const std::vector<std::string> &methods,
                        const std::vector<int> &iterations,
                        const std::vector<std::string> &variants,
                        const std::vector<std::string> &levels,
                        std::optional<std::filesystem::path> dev,
                        std::optional<std::filesystem::path> test,
                        std::optional<std::filesystem::path> out, size_t jobs,
                        std::optional<std::vector<std::tuple<std::string, std::string, std::string>>> words) {
    SweepSpec spec;
    spec.methods.clear();
    for (const auto &x : methods) spec.methods.push_back(Named(SeedMethodFromName(x), "method", x));
    spec.iterations = iterations;
    spec.assemblies.clear();
    for (const auto &x : variants) spec.assemblies.push_back(Named(AssemblyFromName(x), "variant", x));
    spec.levels.clear();
    for (const auto &x : levels) spec.levels.push_back(Named(LexiconLevelFromName(x), "level", x));
    if (words) spec.base.seed_words = ToSeedWords(*words);
    std::optional<EvalCorpus> corpus;
    if (dev.has_value() != test.has_value()) BadArgument("dev and test go together");
    if (dev) corpus = EvalCorpus{LoadCorpus(*dev), LoadCorpus(*test)};
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<SweepRow> rows;
    {
      py::gil_scoped_release release;
      rows = RunSweep(kb, spec, corpus, out, jobs);
    }
    py::list result;
    for (const SweepRow &row : rows) {
      py::dict d;
      d["name"] = row.name;
      d["ok"] = row.ok;
      d["error"] = row.error;
      d["size"] = row.size;
      d["positives"] = row.positives;
      d["negatives"] = row.negatives;
      d["macro_f1"] = row.report ? py::cast(row.report->MacroF1()) : py::none();
      d["accuracy"] = row.report ? py::cast(row.report->accuracy) : py::none();
      d["lexicon_path"] = row.lexicon_path.empty() ? py::none() : py::cast(row.lexicon_path.string());
      result.append(d);
    }
    return result;
  }, py::arg("kb"), py::arg("methods") = std::vector<std::string>{"AG", "TL"},
     py::arg("iterations") = std::vector<int>{0, 1, 2},
     py::arg("variants") = std::vector<std::string>{"G1", "G3"},
     py::arg("levels") = std::vector<std::string>{"synset"},
     py::arg("dev") = py::none(), py::arg("test") = py::none(),
     py::arg("out") = py::none(), py::arg("jobs") = 0,
     py::arg("seed_words") = py::none());
}
