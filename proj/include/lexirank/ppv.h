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

// Personalized PageRank by power iteration.
//
// The solver computes the fixed point of
//
//   Pr = c * M * Pr + (1 - c) * v,   M[j][i] = 1 / deg(i) for each edge i-j
//
// where an isolated node i (deg(i) = 0) sends its walk mass to v instead,
// so that the effective operator stays column stochastic and every result
// is a probability distribution.

#ifndef LEXIRANK_PPV_H_
#define LEXIRANK_PPV_H_

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexirank/graph.h"
#include "lexirank/lkb.h"

namespace lexirank {

struct PpvConfig {
  double damping = 0.85;
  double tolerance = 1e-9;  // L1 distance between successive iterates
  int max_iterations = 1000;
  // Return the last iterate instead of throwing NonConvergenceError.
  bool accept_unconverged = false;

  // Throws Error(kUsage) unless 0 < damping < 1, tolerance > 0 and
  // max_iterations > 0.
  void Validate() const;
};

struct PersonalizationVector {
  std::vector<double> weights;
  size_t unmapped_seeds = 0;

  // Checks non-negativity, a positive entry and unit sum within 1e-12.
  static PersonalizationVector FromWeights(std::vector<double> weights);
};

// Uniform mass over the seeds found in the graph's node index. Seeds absent
// from the index are counted in unmapped_seeds; throws when none map.
PersonalizationVector MakePersonalization(const PropagationGraph &graph,
                                          std::span<const SynsetId> seeds);

struct RankVector {
  std::vector<double> scores;
  int iterations_run = 0;
  double residual = 0.0;  // L1 distance of the last step
  bool converged = false;
  std::shared_ptr<const NodeIndex> nodes;
};

RankVector PageRank(const PropagationGraph &graph,
                    const PersonalizationVector &v, const PpvConfig &config);

// || Pr - (c M' Pr + (1 - c) v) ||_1 with the dangling-aware operator M'.
double FixedPointResidual(const PropagationGraph &graph,
                          std::span<const double> v, double damping,
                          std::span<const double> scores);

// "<synset-id> TAB <score>" in node order, preceded by "# key: value"
// header lines.
void WriteRankVector(
    const RankVector &ranks,
    const std::vector<std::pair<std::string, std::string>> &header,
    std::ostream &out);

}  // namespace lexirank

#endif  // LEXIRANK_PPV_H_
