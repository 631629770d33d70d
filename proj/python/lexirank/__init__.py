# Copyright 2026 The Lexirank Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Polarity lexicon induction with personalized PageRank."""

from ._lexirank import (
    Document,
    EvalReport,
    LexicalKB,
    LexirankError,
    PolarityLexicon,
    PropagationGraph,
    RankVector,
    SeedSet,
    ag_seeds,
    assemble_g1,
    assemble_single,
    avg_ratio,
    build_graph,
    classify_documents,
    classify_phrases,
    fixed_point_residual,
    intrinsic_eval,
    make_personalization,
    pagerank,
    parse_lkb,
    phrase_polarity,
    read_corpus,
    read_lexicon,
    read_seed_set,
    run_pipeline,
    run_sweep,
    synset_to_word,
    tl_seeds,
    tune_threshold,
    word_to_synset,
)

__all__ = [name for name in dir() if not name.startswith("_")]
