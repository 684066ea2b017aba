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

#ifndef MSD_HARNESS_SAMPLER_H
#define MSD_HARNESS_SAMPLER_H

#include <cstdint>
#include <random>
#include <vector>

#include "msd/surface/circuit.h"
#include "msd/surface/frame_sim.h"

namespace msd::harness {

// Shots per sampling block; each block draws from its own stream seeded by
// (seed, block index), so results do not depend on how blocks are grouped.
inline constexpr size_t kBlockWords = 16;
inline constexpr size_t kBlockShots = 64 * kBlockWords;

std::mt19937_64 block_rng(uint64_t seed, uint64_t block);

struct ShotBatch {
  size_t num_shots = 0;
  surface::BitTable detectors;     // flips; zero in the noiseless circuit
  surface::BitTable observables;   // flips relative to the reference
  surface::BitTable checks;        // flips relative to the reference
  surface::BitTable frames;        // raw parities
  surface::BitTable measurements;  // raw outcomes, filled on request
};

class BlockSampler {
 public:
  BlockSampler(const surface::Circuit& circuit, uint64_t seed);

  // Samples block b (kBlockShots shots). Frame rows are raw parities.
  void sample_block(uint64_t block, surface::FrameOutput& out) const;
  const std::vector<uint8_t>& reference() const;

 private:
  const surface::Circuit& circuit_;
  uint64_t seed_;
  surface::FrameSimulator sim_;
  std::vector<uint8_t> frame_reference_;
  mutable std::vector<uint8_t> reference_;
  mutable bool have_reference_ = false;
};

// All shots of a run in one batch. Bit-exact for a given seed.
ShotBatch sample(const surface::Circuit& circuit, size_t shots, uint64_t seed,
                 bool keep_measurements = false);

// Global ids of fired detectors for each lane of a block.
void fired_detectors(const surface::BitTable& detectors, size_t lanes,
                     std::vector<std::vector<uint32_t>>& out);

// Bits of lane across the rows of a table, row r at bit r.
uint64_t lane_mask(const surface::BitTable& table, size_t lane);

}  // namespace msd::harness

#endif  // MSD_HARNESS_SAMPLER_H
