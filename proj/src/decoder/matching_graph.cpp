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

#include "msd/decoder/matching_graph.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "msd/decoder/blossom.h"

namespace msd::decoder {

using surface::DetectorErrorModel;
using surface::ErrorMechanism;

namespace {

int64_t quantized_weight(double q) {
  if (q <= 0.0) return kUnreachable;
  if (q >= 0.5) return 0;
  return static_cast<int64_t>(std::llround(std::log((1.0 - q) / q) * kWeightScale));
}

void xor_sorted(std::vector<uint32_t>& into, const std::vector<uint32_t>& other) {
  std::vector<uint32_t> out;
  std::set_symmetric_difference(into.begin(), into.end(), other.begin(), other.end(),
                                std::back_inserter(out));
  into = std::move(out);
}

}  // namespace

size_t MatchingGraph::degree(int node) const {
  size_t n = 0;
  for (const auto& e : edges) {
    if (e.u == node || e.v == node) ++n;
  }
  return n;
}

MatchingGraph build_matching_graph(const DetectorErrorModel& dem,
                                   const std::vector<uint32_t>& detector_home, uint32_t patch) {
  MatchingGraph g;
  g.patch = patch;
  g.local_of.assign(detector_home.size(), -1);
  for (uint32_t d = 0; d < detector_home.size(); ++d) {
    if (detector_home[d] == patch) {
      g.local_of[d] = static_cast<int>(g.detectors.size());
      g.detectors.push_back(d);
    }
  }
  const int boundary = g.boundary();
  std::map<std::pair<int, int>, size_t> slot;
  for (const ErrorMechanism& m : dem.mechanisms) {
    // Each mechanism is owned by the patch of its earliest detector.
    if (m.detectors.empty() || detector_home[m.detectors.front()] != patch) continue;
    std::vector<int> local;
    std::vector<uint32_t> foreign;
    for (uint32_t d : m.detectors) {
      int l = g.local_of.at(d);
      if (l >= 0) {
        local.push_back(l);
      } else {
        foreign.push_back(d);
      }
    }
    if (local.empty()) continue;
    if (local.size() > 2) {
      throw std::runtime_error("mechanism " + std::to_string(m.id) + " flips " +
                               std::to_string(local.size()) + " detectors of patch " +
                               std::to_string(patch));
    }
    int u = local[0];
    int v = local.size() == 2 ? local[1] : boundary;
    if (u > v) std::swap(u, v);
    GraphEdge cand{u, v, 0, m.probability, m.id, m.observables, m.checks, m.frames,
                   std::move(foreign), {}};
    auto it = slot.find({u, v});
    if (it == slot.end()) {
      slot.emplace(std::make_pair(u, v), g.edges.size());
      g.edges.push_back(std::move(cand));
      continue;
    }
    GraphEdge& cur = g.edges[it->second];
    const double combined = surface::combine_probabilities(cur.probability, cand.probability);
    const double cur_p = dem.mechanisms[cur.mechanism].probability;
    bool better = m.probability > cur_p ||
                  (m.probability == cur_p && cand.foreign.size() < cur.foreign.size());
    if (better) std::swap(cur, cand);
    cur.variants.insert(cur.variants.end(), std::make_move_iterator(cand.variants.begin()),
                        std::make_move_iterator(cand.variants.end()));
    cur.variants.push_back(EdgeVariant{cand.mechanism, dem.mechanisms[cand.mechanism].probability,
                                       cand.observables, cand.checks, cand.frames,
                                       std::move(cand.foreign)});
    cur.probability = combined;
  }
  for (auto& e : g.edges) e.weight = quantized_weight(e.probability);
  g.compute_paths();
  return g;
}

MatchingGraph build_matching_graph(const surface::Circuit& circuit, uint32_t patch) {
  return build_matching_graph(surface::enumerate_error_mechanisms(circuit), circuit.detector_home(),
                              patch);
}

void MatchingGraph::compute_paths() {
  const size_t n = stride();
  const int boundary_node = boundary();
  dist_.assign(n * n, kUnreachable);
  pred_.assign(n * n, -1);
  std::vector<std::vector<std::pair<int, uint32_t>>> adj(n);
  for (uint32_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].u].emplace_back(edges[e].v, e);
    adj[edges[e].v].emplace_back(edges[e].u, e);
  }
  using Item = std::pair<int64_t, int>;
  for (int src = 0; src < static_cast<int>(n); ++src) {
    int64_t* dist = &dist_[src * n];
    int32_t* pred = &pred_[src * n];
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du != dist[u]) continue;
      if (u == boundary_node && u != src) continue;
      for (auto [v, e] : adj[u]) {
        int64_t nd = du + edges[e].weight;
        if (nd < dist[v]) {
          dist[v] = nd;
          pred[v] = static_cast<int32_t>(e);
          pq.push({nd, v});
        }
      }
    }
  }
}

std::vector<uint32_t> MatchingGraph::path(int a, int b) const {
  std::vector<uint32_t> out;
  if (distance(a, b) >= kUnreachable) throw std::runtime_error("no path between nodes");
  int v = b;
  while (v != a) {
    int32_t e = pred_[a * stride() + v];
    out.push_back(static_cast<uint32_t>(e));
    v = edges[e].u == v ? edges[e].v : edges[e].u;
  }
  return out;
}

Correction mwpm_decode(const MatchingGraph& graph, const std::vector<int>& defects,
                       const std::vector<uint8_t>* fired) {
  Correction c;
  const int k = static_cast<int>(defects.size());
  if (k == 0) return c;
  const int bnd = graph.boundary();
  std::vector<std::pair<int, int>> pairs;  // (a, b) with b possibly the boundary
  if (k == 1) {
    pairs.emplace_back(defects[0], bnd);
  } else if (k == 2) {
    int64_t direct = graph.distance(defects[0], defects[1]);
    int64_t via = graph.distance(defects[0], bnd);
    int64_t via2 = graph.distance(defects[1], bnd);
    if (via < kUnreachable && via2 < kUnreachable && via + via2 < direct) {
      pairs.emplace_back(defects[0], bnd);
      pairs.emplace_back(defects[1], bnd);
    } else {
      pairs.emplace_back(defects[0], defects[1]);
    }
  } else {
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        int64_t d = graph.distance(defects[i], defects[j]);
        if (d < kUnreachable) edges.push_back({i, j, d});
        edges.push_back({k + i, k + j, 0});
      }
      int64_t db = graph.distance(defects[i], bnd);
      if (db < kUnreachable) edges.push_back({i, k + i, db});
    }
    auto mate = min_weight_perfect_matching(2 * k, edges);
    for (int i = 0; i < k; ++i) {
      if (mate[i] == k + i) {
        pairs.emplace_back(defects[i], bnd);
      } else if (mate[i] > i && mate[i] < k) {
        pairs.emplace_back(defects[i], defects[mate[i]]);
      }
    }
  }
  std::vector<uint32_t> used;
  for (auto [a, b] : pairs) {
    int64_t d = graph.distance(a, b);
    if (d >= kUnreachable) throw std::runtime_error("defect cannot be matched");
    c.weight += d;
    for (uint32_t e : graph.path(a, b)) used.push_back(e);
  }
  std::sort(used.begin(), used.end());
  for (size_t i = 0; i < used.size();) {
    size_t j = i;
    while (j < used.size() && used[j] == used[i]) ++j;
    if ((j - i) % 2 == 1) c.edges.push_back(used[i]);
    i = j;
  }
  auto agreement = [&](const std::vector<uint32_t>& foreign) {
    int score = 0;
    for (uint32_t d : foreign) score += (*fired)[d] ? 1 : -1;
    return score;
  };
  for (uint32_t e : c.edges) {
    const GraphEdge& ge = graph.edges[e];
    uint32_t mech = ge.mechanism;
    uint64_t obs = ge.observables, checks = ge.checks, frames = ge.frames;
    const std::vector<uint32_t>* foreign = &ge.foreign;
    if (fired && !ge.variants.empty()) {
      int best = agreement(ge.foreign);
      for (const EdgeVariant& v : ge.variants) {
        int s = agreement(v.foreign);
        if (s > best) {
          best = s;
          mech = v.mechanism;
          obs = v.observables;
          checks = v.checks;
          frames = v.frames;
          foreign = &v.foreign;
        }
      }
    }
    c.mechanisms.push_back(mech);
    c.observables ^= obs;
    c.checks ^= checks;
    c.frames ^= frames;
    if (!foreign->empty()) xor_sorted(c.foreign, *foreign);
  }
  return c;
}

std::string dump_graph(const MatchingGraph& graph) {
  std::ostringstream out;
  out << "GRAPH patch=" << graph.patch << " nodes=" << graph.num_nodes()
      << " edges=" << graph.edges.size() << '\n';
  for (size_t i = 0; i < graph.num_nodes(); ++i) {
    out << "NODE " << i << ' ' << graph.detectors[i] << '\n';
  }
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& ge = graph.edges[e];
    out << "EDGE " << e << ' ' << ge.u << ' ';
    if (ge.v == graph.boundary()) {
      out << 'B';
    } else {
      out << ge.v;
    }
    out << ' ' << ge.weight << " mech=" << ge.mechanism << " obs=" << ge.observables
        << " checks=" << ge.checks;
    if (!ge.foreign.empty()) {
      out << " foreign=";
      for (size_t i = 0; i < ge.foreign.size(); ++i) out << (i ? "," : "") << ge.foreign[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace msd::decoder
