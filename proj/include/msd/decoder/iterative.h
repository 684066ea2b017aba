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

#ifndef MSD_DECODER_ITERATIVE_H
#define MSD_DECODER_ITERATIVE_H

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "msd/decoder/matching_graph.h"
#include "msd/surface/circuit.h"
#include "msd/surface/error_model.h"

namespace msd::decoder {

struct IterativeConfig {
  int max_global_iters = 3;
};

struct DecodeResult {
  std::vector<Correction> per_patch;
  uint64_t observables = 0;
  uint64_t checks = 0;
  uint64_t frames = 0;
  int iterations_used = 0;
  bool converged = false;
};

// Per-patch matching with cross-patch syndrome toggles. A sweep visits the
// patches in order of their earliest defect; each patch's effective syndrome
// is its own detectors XOR the foreign detectors of every other patch's
// current correction, and it is re-decoded when that changed. Sweeps repeat
// until one changes nothing or the cap is hit. Every mechanism is an edge of
// exactly one graph, the home patch of its earliest detector. Among parallel
// mechanisms, a patch picks the one whose foreign detectors best match the
// fired set, not counting patches that currently toggle it.
class IterativeDecoder {
 public:
  IterativeDecoder(const surface::Circuit& circuit, const surface::DetectorErrorModel& dem,
                   IterativeConfig config = {});
  IterativeDecoder(const surface::Circuit& circuit, IterativeConfig config = {});

  const IterativeConfig& config() const { return config_; }
  void set_config(IterativeConfig config);
  size_t num_patches() const { return graphs_.size(); }
  size_t num_detectors() const { return home_.size(); }
  const MatchingGraph& graph(size_t patch) const { return graphs_.at(patch); }

  // fired: global ids of detectors that fired, any order. When trace is set,
  // every sweep's effective syndromes are written to it.
  DecodeResult decode(const std::vector<uint32_t>& fired, std::ostream* trace = nullptr) const;

 private:
  void build(const surface::DetectorErrorModel& dem);

  IterativeConfig config_;
  std::vector<uint32_t> home_;
  std::vector<MatchingGraph> graphs_;
};

DecodeResult iterative_decode(const IterativeDecoder& decoder, const std::vector<uint32_t>& fired);

struct PredictedOutcome {
  bool accepted = true;
  bool frame_offset = false;
  bool output_error = false;
};

// measured_*: flips relative to the noiseless reference for checks and
// observables; frame_raw is the raw frame-parity bit of the shot.
PredictedOutcome predict_outcome(const DecodeResult& result, uint64_t measured_checks,
                                 uint64_t measured_observables, bool frame_raw,
                                 bool offset_when_even);

}  // namespace msd::decoder

#endif  // MSD_DECODER_ITERATIVE_H
