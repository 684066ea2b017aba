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

#ifndef MSD_DECODER_BLOSSOM_H
#define MSD_DECODER_BLOSSOM_H

#include <cstddef>
#include <cstdint>
#include <vector>

namespace msd::decoder {

struct WeightedEdge {
  int u;
  int v;
  int64_t weight;
};

// Edmonds' blossom algorithm with dual variables, O(n^3). Returns the mate
// of every vertex or -1. With max_cardinality, only maximum-cardinality
// matchings are considered.
std::vector<int> max_weight_matching(size_t num_vertices, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

// Throws std::runtime_error when no perfect matching exists.
std::vector<int> min_weight_perfect_matching(size_t num_vertices,
                                             const std::vector<WeightedEdge>& edges);

}  // namespace msd::decoder

#endif  // MSD_DECODER_BLOSSOM_H
