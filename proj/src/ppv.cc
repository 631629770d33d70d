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

#include "lexirank/ppv.h"

#include <cmath>
#include <ostream>
#include <set>

#include "lexirank/error.h"
#include "lexirank/text.h"

namespace lexirank {

namespace {

constexpr const char *kModule = "ppv";

// One application of the effective operator: out = c M' in + (1 - c) v.
void Step(const PropagationGraph &graph, std::span<const double> v,
          double damping, std::span<const double> in,
          std::vector<double> &outflow, std::span<double> out) {
  const size_t n = graph.num_nodes();
  double dangling = 0.0;
  for (size_t i = 0; i < n; ++i) {
    size_t degree = graph.degree(i);
    if (degree == 0) {
      dangling += in[i];
      outflow[i] = 0.0;
    } else {
      outflow[i] = in[i] / static_cast<double>(degree);
    }
  }
  const double restart = damping * dangling + (1.0 - damping);
  for (size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (uint32_t i : graph.neighbors(j)) sum += outflow[i];
    out[j] = damping * sum + restart * v[j];
  }
}

}  // namespace

void PpvConfig::Validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw Error(ErrorKind::kUsage, kModule, "damping must lie in (0, 1)");
  }
  if (!(tolerance > 0.0)) {
    throw Error(ErrorKind::kUsage, kModule, "tolerance must be positive");
  }
  if (max_iterations <= 0) {
    throw Error(ErrorKind::kUsage, kModule, "max_iterations must be positive");
  }
}

PersonalizationVector PersonalizationVector::FromWeights(
    std::vector<double> weights) {
  double sum = 0.0;
  bool positive = false;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw Error(ErrorKind::kUsage, kModule,
                  "personalization weights must be non-negative");
    }
    positive = positive || w > 0.0;
    sum += w;
  }
  if (!positive || std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorKind::kUsage, kModule,
                "personalization weights must sum to 1");
  }
  return {std::move(weights), 0};
}

PersonalizationVector MakePersonalization(const PropagationGraph &graph,
                                          std::span<const SynsetId> seeds) {
  std::set<size_t> mapped;
  size_t unmapped = 0;
  for (SynsetId seed : seeds) {
    if (auto index = graph.nodes().Find(seed)) {
      mapped.insert(*index);
    } else {
      ++unmapped;
    }
  }
  if (mapped.empty()) {
    throw Error(ErrorKind::kInput, kModule,
                "no seed maps onto the graph (" + std::to_string(unmapped) +
                    " unmapped)");
  }
  PersonalizationVector v;
  v.weights.assign(graph.num_nodes(), 0.0);
  const double mass = 1.0 / static_cast<double>(mapped.size());
  for (size_t index : mapped) v.weights[index] = mass;
  v.unmapped_seeds = unmapped;
  return v;
}

RankVector PageRank(const PropagationGraph &graph,
                    const PersonalizationVector &v, const PpvConfig &config) {
  config.Validate();
  const size_t n = graph.num_nodes();
  if (v.weights.size() != n) {
    throw Error(ErrorKind::kUsage, kModule,
                "personalization length does not match the graph");
  }

  RankVector result;
  result.nodes = graph.shared_nodes();
  std::vector<double> current = v.weights;
  std::vector<double> next(n);
  std::vector<double> outflow(n);
  double residual = 0.0;
  for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
    Step(graph, v.weights, config.damping, current, outflow, next);
    residual = 0.0;
    for (size_t i = 0; i < n; ++i) residual += std::abs(next[i] - current[i]);
    current.swap(next);
    result.iterations_run = iteration;
    if (residual <= config.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.residual = residual;
  if (!result.converged && !config.accept_unconverged) {
    throw NonConvergenceError(
        "no convergence after " + std::to_string(result.iterations_run) +
            " iterations (residual " + FormatScore(residual) + ")",
        residual, result.iterations_run);
  }
  result.scores = std::move(current);
  return result;
}

double FixedPointResidual(const PropagationGraph &graph,
                          std::span<const double> v, double damping,
                          std::span<const double> scores) {
  const size_t n = graph.num_nodes();
  std::vector<double> image(n);
  std::vector<double> outflow(n);
  Step(graph, v, damping, scores, outflow, image);
  double residual = 0.0;
  for (size_t i = 0; i < n; ++i) residual += std::abs(scores[i] - image[i]);
  return residual;
}

void WriteRankVector(
    const RankVector &ranks,
    const std::vector<std::pair<std::string, std::string>> &header,
    std::ostream &out) {
  for (const auto &[key, value] : header) {
    out << "# " << key << ": " << value << '\n';
  }
  for (size_t i = 0; i < ranks.scores.size(); ++i) {
    out << ranks.nodes->id(i).ToString() << '\t'
        << FormatScore(ranks.scores[i]) << '\n';
  }
}

}  // namespace lexirank
