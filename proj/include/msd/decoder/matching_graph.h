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

#ifndef MSD_DECODER_MATCHING_GRAPH_H
#define MSD_DECODER_MATCHING_GRAPH_H

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "msd/surface/circuit.h"
#include "msd/surface/error_model.h"

namespace msd::decoder {

// Integer weight units per natural-log unit.
inline constexpr double kWeightScale = 1000.0;
inline constexpr int64_t kUnreachable = std::numeric_limits<int64_t>::max() / 4;

// One mechanism behind an edge.
struct EdgeVariant {
  uint32_t mechanism;
  double probability;
  uint64_t observables;
  uint64_t checks;
  uint64_t frames;
  std::vector<uint32_t> foreign;
};

struct GraphEdge {
  int u;
  int v;  // equals the boundary node for boundary edges
  int64_t weight;
  double probability;     // combined over parallel mechanisms
  uint32_t mechanism;     // representative
  uint64_t observables;
  uint64_t checks;
  uint64_t frames;
  std::vector<uint32_t> foreign;  // global detectors homed elsewhere
  std::vector<EdgeVariant> variants;  // non-representative parallel mechanisms
};

class MatchingGraph {
 public:
  uint32_t patch = 0;
  std::vector<uint32_t> detectors;  // local node -> global detector
  std::vector<int> local_of;        // global detector -> local node or -1
  std::vector<GraphEdge> edges;

  size_t num_nodes() const { return detectors.size(); }
  int boundary() const { return static_cast<int>(detectors.size()); }
  size_t degree(int node) const;

  // All-pairs shortest paths; the boundary is a sink and never relays.
  void compute_paths();
  int64_t distance(int a, int b) const { return dist_[a * stride() + b]; }
  // Edge ids along the shortest path between a and b.
  std::vector<uint32_t> path(int a, int b) const;

 private:
  size_t stride() const { return detectors.size() + 1; }
  std::vector<int64_t> dist_;
  std::vector<int32_t> pred_;
};

MatchingGraph build_matching_graph(const surface::DetectorErrorModel& dem,
                                   const std::vector<uint32_t>& detector_home, uint32_t patch);
MatchingGraph build_matching_graph(const surface::Circuit& circuit, uint32_t patch);

struct Correction {
  std::vector<uint32_t> edges;       // edge ids used an odd number of times
  std::vector<uint32_t> mechanisms;  // mechanism chosen for each edge
  uint64_t observables = 0;
  uint64_t checks = 0;
  uint64_t frames = 0;
  std::vector<uint32_t> foreign;  // sorted, toggled global detectors
  int64_t weight = 0;             // sum of matched path lengths
};

// Minimum-weight pairing of defects (local node ids), each defect also free
// to match the boundary. Throws std::runtime_error if no pairing exists.
// With `fired` (a global detector bitmap), each used edge takes the parallel
// mechanism whose foreign detectors agree best with it.
Correction mwpm_decode(const MatchingGraph& graph, const std::vector<int>& defects,
                       const std::vector<uint8_t>* fired = nullptr);

// Line-oriented dump: one NODE line per detector, one EDGE line per edge.
std::string dump_graph(const MatchingGraph& graph);

}  // namespace msd::decoder

#endif  // MSD_DECODER_MATCHING_GRAPH_H
