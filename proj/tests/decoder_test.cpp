// Copyright 2026 The msdsim Authors
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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "msd/decoder/iterative.h"
#include "msd/decoder/matching_graph.h"
#include "msd/harness/sampler.h"
#include "msd/protocols/protocol.h"
#include "msd/surface/builders.h"
#include "msd/surface/error_model.h"

namespace msd::decoder {
namespace {

using protocols::build_protocol;
using protocols::ProtocolKind;
using surface::Circuit;
using surface::DetectorErrorModel;

// Floyd-Warshall where the boundary node may end a path but never relay one.
std::vector<std::vector<int64_t>> floyd(const MatchingGraph& g) {
  const size_t n = g.num_nodes() + 1;
  const int64_t inf = std::numeric_limits<int64_t>::max() / 4;
  std::vector<std::vector<int64_t>> d(n, std::vector<int64_t>(n, inf));
  for (size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.weight);
  }
  for (size_t k = 0; k + 1 < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (d[i][k] < inf && d[k][j] < inf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

// Smallest total distance over all ways to pair defects or send them to
// the boundary.
int64_t brute_matching(const std::vector<std::vector<int64_t>>& d, std::vector<int> defects,
                       int boundary) {
  if (defects.empty()) return 0;
  const int64_t inf = std::numeric_limits<int64_t>::max() / 4;
  int a = defects.back();
  defects.pop_back();
  int64_t best = inf;
  if (d[a][boundary] < inf) {
    int64_t rest = brute_matching(d, defects, boundary);
    if (rest < inf) best = d[a][boundary] + rest;
  }
  for (size_t i = 0; i < defects.size(); ++i) {
    if (d[a][defects[i]] >= inf) continue;
    auto others = defects;
    others.erase(others.begin() + static_cast<long>(i));
    int64_t rest = brute_matching(d, others, boundary);
    if (rest < inf) best = std::min(best, d[a][defects[i]] + rest);
  }
  return best;
}

class MemoryGraph : public ::testing::Test {
 protected:
  void SetUp() override {
    circuit_ = surface::build_memory_circuit(3, 3, {1e-3, 0});
    dem_ = surface::enumerate_error_mechanisms(circuit_);
    graph_ = build_matching_graph(dem_, circuit_.detector_home(), 0);
  }
  Circuit circuit_;
  DetectorErrorModel dem_;
  MatchingGraph graph_;
};

TEST_F(MemoryGraph, WeightsFollowProbabilities) {
  EXPECT_EQ(graph_.num_nodes(), circuit_.num_detectors());
  for (const auto& e : graph_.edges) {
    EXPECT_GE(e.u, 0);
    EXPECT_LE(e.v, graph_.boundary());
    EXPECT_NE(e.u, e.v);
    EXPECT_EQ(e.weight, std::llround(std::log((1 - e.probability) / e.probability) * kWeightScale));
    EXPECT_TRUE(e.foreign.empty());
  }
}

TEST_F(MemoryGraph, ParallelMechanismsCombine) {
  std::map<std::pair<int, int>, double> combined;
  for (const auto& m : dem_.mechanisms) {
    int u = graph_.local_of[m.detectors[0]];
    int v = m.detectors.size() == 2 ? graph_.local_of[m.detectors[1]] : graph_.boundary();
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    auto [it, fresh] = combined.emplace(key, m.probability);
    if (!fresh) it->second = surface::combine_probabilities(it->second, m.probability);
  }
  ASSERT_EQ(combined.size(), graph_.edges.size());
  for (const auto& e : graph_.edges) {
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    EXPECT_NEAR(e.probability, combined[key], 1e-15);
  }
}

TEST_F(MemoryGraph, ShortestPathsMatchFloyd) {
  auto d = floyd(graph_);
  const int n = graph_.boundary() + 1;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (d[a][b] >= kUnreachable) continue;
      ASSERT_EQ(graph_.distance(a, b), d[a][b]) << a << " " << b;
      int64_t along = 0;
      for (uint32_t e : graph_.path(a, b)) along += graph_.edges[e].weight;
      EXPECT_EQ(along, d[a][b]);
    }
  }
}

TEST_F(MemoryGraph, EmptySyndrome) {
  auto c = mwpm_decode(graph_, {});
  EXPECT_TRUE(c.edges.empty());
  EXPECT_EQ(c.observables, 0u);
  EXPECT_EQ(c.weight, 0);
}

TEST_F(MemoryGraph, MatchingIsMinimalAndExplainsDefects) {
  auto d = floyd(graph_);
  std::mt19937 rng(3);
  const int n = static_cast<int>(graph_.num_nodes());
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    std::vector<int> defects(nodes.begin(), nodes.begin() + 1 + trial % 7);
    std::sort(defects.begin(), defects.end());
    auto c = mwpm_decode(graph_, defects);
    EXPECT_EQ(c.weight, brute_matching(d, defects, graph_.boundary())) << "trial " << trial;
    // The boundary of the chosen edge set is exactly the defect set.
    std::vector<int> parity(n + 1);
    for (uint32_t e : c.edges) {
      parity[graph_.edges[e].u] ^= 1;
      parity[graph_.edges[e].v] ^= 1;
    }
    for (int v = 0; v < n; ++v) {
      bool is_defect = std::binary_search(defects.begin(), defects.end(), v);
      EXPECT_EQ(parity[v], is_defect ? 1 : 0) << "trial " << trial << " node " << v;
    }
  }
}

TEST_F(MemoryGraph, SingleFaultsAreCorrected) {
  IterativeDecoder dec(circuit_, dem_, IterativeConfig{1});
  for (const auto& comp : dem_.components) {
    if (comp.detectors.empty()) continue;
    auto r = dec.decode(comp.detectors);
    EXPECT_EQ(r.observables, comp.observables) << "component " << comp.id;
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations_used, 1);
  }
}

TEST_F(MemoryGraph, SinglePatchMatchesPlainMatching) {
  IterativeDecoder dec(circuit_, dem_, IterativeConfig{3});
  std::vector<uint32_t> fired{1, 4, 9, 13};
  std::vector<int> local;
  for (uint32_t f : fired) local.push_back(graph_.local_of[f]);
  std::vector<uint8_t> map(circuit_.num_detectors());
  for (uint32_t f : fired) map[f] = 1;
  auto plain = mwpm_decode(graph_, local, &map);
  auto r = dec.decode(fired);
  EXPECT_EQ(r.observables, plain.observables);
  EXPECT_EQ(r.per_patch[0].edges, plain.edges);
  EXPECT_EQ(r.iterations_used, 1);
}

TEST(IterativeDecoder, RejectsBadInput) {
  auto c = surface::build_memory_circuit(3, 2, {1e-3, 0});
  EXPECT_THROW(IterativeDecoder(c, IterativeConfig{0}), std::invalid_argument);
  IterativeDecoder dec(c);
  EXPECT_THROW(dec.decode({static_cast<uint32_t>(c.num_detectors())}), std::out_of_range);
  auto r = dec.decode({});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.observables, 0u);
}

class SubcircuitDecoding : public ::testing::TestWithParam<ProtocolKind> {};

TEST_P(SubcircuitDecoding, EverySingleFaultIsCorrected) {
  auto spec = build_protocol(GetParam());
  auto c = surface::build_cnot_subcircuit_experiment(spec, 3, {1e-3, 0});
  auto dem = surface::enumerate_error_mechanisms(c);
  IterativeDecoder dec(c, dem, IterativeConfig{8});
  size_t failures = 0;
  for (const auto& comp : dem.components) {
    if (comp.detectors.empty()) continue;
    auto r = dec.decode(comp.detectors);
    failures += r.observables != comp.observables;
    EXPECT_TRUE(r.converged) << "component " << comp.id;
  }
  EXPECT_EQ(failures, 0u);
}

INSTANTIATE_TEST_SUITE_P(Protocols, SubcircuitDecoding,
                         ::testing::Values(ProtocolKind::SevenToOne, ProtocolKind::FifteenToOne));

TEST(DistillationDecoding, SingleFaultsKeepChecksAndOutput) {
  auto spec = build_protocol(ProtocolKind::SevenToOne);
  auto c = surface::build_distillation_circuit(spec, 3, {1e-3, 0.1});
  auto dem = surface::enumerate_error_mechanisms(c);
  IterativeDecoder dec(c, dem, IterativeConfig{8});
  size_t failures = 0;
  for (const auto& comp : dem.components) {
    if (comp.detectors.empty()) continue;
    auto r = dec.decode(comp.detectors);
    failures += r.observables != comp.observables || r.checks != comp.checks;
  }
  EXPECT_EQ(failures, 0u);
}

// A data fault on a control patch just before a transversal CNOT lights up
// both patches; the second sweep should settle it.
TEST(DistillationDecoding, CrossPatchFaultSettlesQuickly) {
  auto spec = build_protocol(ProtocolKind::SevenToOne);
  auto c = surface::build_cnot_subcircuit_experiment(spec, 3, {1e-3, 0});
  auto dem = surface::enumerate_error_mechanisms(c);
  IterativeDecoder dec(c, dem, IterativeConfig{8});
  size_t cross = 0;
  for (const auto& comp : dem.components) {
    std::map<uint32_t, int> homes;
    for (uint32_t d : comp.detectors) ++homes[c.detector_home()[d]];
    if (homes.size() < 2) continue;
    ++cross;
    auto r = dec.decode(comp.detectors);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.iterations_used, 2) << "component " << comp.id;
  }
  EXPECT_GT(cross, 0u);
}

TEST(DistillationGraph, InvariantsAndEdgeCount) {
  auto spec = build_protocol(ProtocolKind::SevenToOne);
  auto c = surface::build_distillation_circuit(spec, 3, {1e-3, 0.01});
  IterativeDecoder dec(c);
  for (size_t p = 0; p < dec.num_patches(); ++p) {
    const auto& g = dec.graph(p);
    for (int n = 0; n < static_cast<int>(g.num_nodes()); ++n) {
      EXPECT_GE(g.degree(n), 1u) << "patch " << p << " node " << n;
      EXPECT_LT(g.distance(n, g.boundary()), kUnreachable) << "patch " << p << " node " << n;
    }
    for (const auto& e : g.edges) EXPECT_GE(e.weight, 0);
  }
  // Frozen at first run.
  EXPECT_EQ(dec.graph(0).edges.size(), 142u);
  EXPECT_EQ(dec.graph(0).num_nodes(), 40u);
}

TEST(DistillationGraph, RejectsHyperedges) {
  DetectorErrorModel dem;
  dem.num_detectors = 3;
  surface::ErrorMechanism m;
  m.detectors = {0, 1, 2};
  m.probability = 0.01;
  dem.mechanisms.push_back(m);
  EXPECT_THROW(build_matching_graph(dem, {0, 0, 0}, 0), std::runtime_error);
}

// The chosen mechanisms of all patches together reproduce the sampled
// syndrome whenever the sweeps settle.
TEST(IterativeDecoder, ResidualIsEmpty) {
  auto spec = build_protocol(ProtocolKind::SevenToOne);
  auto c = surface::build_cnot_subcircuit_experiment(spec, 3, {3e-3, 0});
  auto dem = surface::enumerate_error_mechanisms(c);
  IterativeDecoder dec(c, dem, IterativeConfig{16});
  auto batch = harness::sample(c, 1000, 17);
  std::vector<std::vector<uint32_t>> fired;
  harness::fired_detectors(batch.detectors, 1000, fired);
  size_t settled = 0;
  for (const auto& f : fired) {
    auto r = dec.decode(f);
    if (!r.converged) continue;
    ++settled;
    std::vector<uint8_t> residual(c.num_detectors(), 0);
    for (uint32_t d : f) residual[d] ^= 1;
    for (const auto& pc : r.per_patch) {
      for (uint32_t m : pc.mechanisms) {
        for (uint32_t d : dem.mechanisms[m].detectors) residual[d] ^= 1;
      }
    }
    EXPECT_EQ(std::count(residual.begin(), residual.end(), 1), 0);
  }
  EXPECT_GT(settled, 990u);
}

TEST(PredictOutcome, CombinesCorrectionWithReadout) {
  DecodeResult r;
  r.checks = 0b101;
  r.observables = 1;
  r.frames = 1;
  auto out = predict_outcome(r, 0b101, 1, false, true);
  EXPECT_TRUE(out.accepted);
  EXPECT_FALSE(out.output_error);
  EXPECT_FALSE(out.frame_offset);
  out = predict_outcome(r, 0b100, 0, true, false);
  EXPECT_FALSE(out.accepted);
  EXPECT_TRUE(out.output_error);
  EXPECT_FALSE(out.frame_offset);
}

}  // namespace
}  // namespace msd::decoder
