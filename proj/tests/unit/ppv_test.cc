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
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lexirank/error.h"
#include "test_util.h"

namespace lexirank {
namespace {

std::shared_ptr<const NodeIndex> Nodes(size_t n) {
  std::vector<SynsetId> ids;
  for (size_t i = 0; i < n; ++i) {
    ids.push_back({PartOfSpeech::kAdjective, static_cast<uint32_t>(i + 1)});
  }
  return std::make_shared<const NodeIndex>(std::move(ids));
}

PropagationGraph Path(size_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return PropagationGraph(GraphVariant::kG3, Nodes(n), std::move(edges));
}

double Sum(const std::vector<double> &x) {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

TEST_CASE("config validation") {
  PpvConfig config;
  CHECK_NOTHROW(config.Validate());
  for (double c : {0.0, 1.0, -0.5}) {
    PpvConfig bad;
    bad.damping = c;
    CHECK_THROWS_AS(bad.Validate(), Error);
  }
  PpvConfig bad;
  bad.max_iterations = 0;
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = {};
  bad.tolerance = 0;
  CHECK_THROWS_AS(bad.Validate(), Error);
}

TEST_CASE("personalization") {
  PropagationGraph g = Path(12);
  SUBCASE("singleton") {
    SynsetId a{PartOfSpeech::kAdjective, 3};
    auto v = MakePersonalization(g, std::span(&a, 1));
    CHECK(v.weights[2] == 1.0);
    CHECK(Sum(v.weights) == 1.0);
  }
  SUBCASE("pair") {
    std::vector<SynsetId> seeds = {{PartOfSpeech::kAdjective, 1},
                                   {PartOfSpeech::kAdjective, 2}};
    auto v = MakePersonalization(g, seeds);
    CHECK(v.weights[0] == 0.5);
    CHECK(v.weights[1] == 0.5);
  }
  SUBCASE("unmapped seeds are counted") {
    std::vector<SynsetId> seeds;
    for (uint32_t i = 1; i <= 8; ++i) seeds.push_back({PartOfSpeech::kAdjective, i});
    seeds.push_back({PartOfSpeech::kNoun, 1});
    seeds.push_back({PartOfSpeech::kVerb, 99});
    auto v = MakePersonalization(g, seeds);
    CHECK(v.unmapped_seeds == 2);
    for (int i = 0; i < 8; ++i) CHECK(v.weights[i] == 0.125);
    CHECK(v.weights[8] == 0.0);
  }
  SUBCASE("no mapped seed") {
    SynsetId missing{PartOfSpeech::kNoun, 5};
    CHECK_THROWS_AS(MakePersonalization(g, std::span(&missing, 1)), Error);
    CHECK_THROWS_AS(MakePersonalization(g, std::span<const SynsetId>()), Error);
  }
  SUBCASE("explicit weights") {
    CHECK_THROWS_AS(PersonalizationVector::FromWeights({0.5, 0.4}), Error);
    CHECK_THROWS_AS(PersonalizationVector::FromWeights({1.5, -0.5}), Error);
    CHECK_THROWS_AS(PersonalizationVector::FromWeights({0.0, 0.0}), Error);
    CHECK_NOTHROW(PersonalizationVector::FromWeights({0.25, 0.75}));
  }
}

TEST_CASE("two connected nodes split the mass evenly") {
  PropagationGraph g = Path(2);
  auto v = PersonalizationVector::FromWeights({0.5, 0.5});
  RankVector r = PageRank(g, v, {});
  CHECK(r.scores[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.scores[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.converged);
}

TEST_CASE("vanishing damping returns the personalization") {
  std::mt19937_64 rng(3);
  PropagationGraph g = testing::RandomGraph(rng, 20, 0.2);
  auto v = PersonalizationVector::FromWeights(testing::RandomPersonalization(rng, 20));
  PpvConfig config;
  config.damping = 1e-12;
  RankVector r = PageRank(g, v, config);
  for (size_t i = 0; i < 20; ++i) CHECK(std::fabs(r.scores[i] - v.weights[i]) <= 1e-9);
}

TEST_CASE("three node path against the frozen dense solution") {
  // (I - 0.85 M) Pr = 0.15 (1, 0, 0), solved densely and kept to 12
  // significant digits.
  const double expected[] = {3.452702702703e-01, 4.594594594595e-01,
                             1.952702702703e-01};
  PpvConfig tight;
  tight.tolerance = 1e-14;
  RankVector r = PageRank(Path(3), PersonalizationVector::FromWeights({1, 0, 0}), tight);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::fabs(r.scores[i] - expected[i]) <= 5e-13);
  }
  auto oracle = testing::DenseRankOracle(Path(3), std::vector<double>{1, 0, 0}, 0.85);
  for (int i = 0; i < 3; ++i) CHECK(std::fabs(oracle[i] - expected[i]) <= 5e-13);
}

TEST_CASE("matches the dense oracle on random graphs") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<size_t> size(1, 50);
  std::uniform_real_distribution<double> density(0.02, 0.4);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t n = size(rng);
    PropagationGraph g = testing::RandomGraph(rng, n, density(rng));
    auto weights = testing::RandomPersonalization(rng, n);
    auto v = PersonalizationVector::FromWeights(weights);
    PpvConfig config;
    config.tolerance = 1e-12;
    RankVector r = PageRank(g, v, config);
    auto oracle = testing::DenseRankOracle(g, weights, config.damping);
    for (size_t i = 0; i < n; ++i) {
      CHECK(std::fabs(r.scores[i] - oracle[i]) <= 1e-8);
    }
  }
}

TEST_CASE("default stopping rule bounds the distance to the fixed point") {
  std::mt19937_64 rng(37);
  const PpvConfig config;
  const double bound =
      config.damping / (1 - config.damping) * config.tolerance;
  for (int trial = 0; trial < 40; ++trial) {
    PropagationGraph g = testing::RandomGraph(rng, 30, 0.1);
    auto weights = testing::RandomPersonalization(rng, 30);
    RankVector r = PageRank(g, PersonalizationVector::FromWeights(weights), config);
    auto oracle = testing::DenseRankOracle(g, weights, config.damping);
    double l1 = 0.0;
    for (size_t i = 0; i < 30; ++i) l1 += std::fabs(r.scores[i] - oracle[i]);
    CHECK(l1 <= bound);
  }
}

TEST_CASE("returned vectors are stochastic fixed points") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    // Sparse draws leave isolated nodes.
    PropagationGraph g = testing::RandomGraph(rng, 40, 0.03);
    auto v = PersonalizationVector::FromWeights(testing::RandomPersonalization(rng, 40));
    RankVector r = PageRank(g, v, {});
    CHECK(std::fabs(Sum(r.scores) - 1.0) <= 1e-9);
    for (double x : r.scores) CHECK(x >= 0.0);
    CHECK(FixedPointResidual(g, v.weights, 0.85, r.scores) <= 1e-9);
    CHECK(r.iterations_run <= 1000);
    CHECK(r.nodes == g.shared_nodes());
  }
}

TEST_CASE("seed dominates on a path") {
  for (size_t n : {2, 3, 5, 9, 14}) {
    PropagationGraph path = Path(n);
    for (size_t s = 0; s < n; ++s) {
      std::vector<double> w(n, 0.0);
      w[s] = 1.0;
      RankVector r = PageRank(path, PersonalizationVector::FromWeights(w), {});
      for (size_t u = 0; u < n; ++u) {
        if (u == s) continue;
        // Per unit of degree the seed always leads.
        CHECK(r.scores[s] / path.degree(s) > r.scores[u] / path.degree(u));
        if (path.degree(s) == 2 || n == 2) CHECK(r.scores[s] > r.scores[u]);
      }
    }
  }
  // An endpoint seed is outranked by its degree-2 neighbour.
  RankVector end = PageRank(Path(3), PersonalizationVector::FromWeights({1, 0, 0}), {});
  CHECK(end.scores[1] > end.scores[0]);
}

TEST_CASE("edgeless graph returns the personalization") {
  PropagationGraph g(GraphVariant::kG1Ant, Nodes(4), {});
  auto v = PersonalizationVector::FromWeights({0.25, 0.75, 0, 0});
  RankVector r = PageRank(g, v, {});
  CHECK(r.scores == v.weights);
}

TEST_CASE("non-convergence") {
  PpvConfig config;
  config.max_iterations = 3;
  auto v = PersonalizationVector::FromWeights({1, 0, 0, 0, 0});
  try {
    PageRank(Path(5), v, config);
    FAIL("expected non-convergence");
  } catch (const NonConvergenceError &e) {
    CHECK(e.iterations() == 3);
    CHECK(e.residual() > config.tolerance);
    CHECK(ExitCodeFor(e.kind()) == 3);
  }
  config.accept_unconverged = true;
  RankVector r = PageRank(Path(5), v, config);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations_run == 3);
}

TEST_CASE("rank vector serialization") {
  RankVector r = PageRank(Path(3), PersonalizationVector::FromWeights({1, 0, 0}), {});
  std::ostringstream out;
  WriteRankVector(r, {{"variant", "G3"}}, out);
  const std::string text = out.str();
  CHECK(text.find("# variant: G3\n") != std::string::npos);
  CHECK(text.find("00000001-a\t0.34527027") != std::string::npos);
}

}  // namespace
}  // namespace lexirank
