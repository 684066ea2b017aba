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

#ifndef MSD_HARNESS_EXPERIMENT_H
#define MSD_HARNESS_EXPERIMENT_H

#include <cstdint>
#include <string>
#include <vector>

#include "msd/decoder/iterative.h"
#include "msd/harness/stats.h"
#include "msd/protocols/protocol.h"

namespace msd::harness {

struct ExperimentConfig {
  protocols::ProtocolKind protocol = protocols::ProtocolKind::SevenToOne;
  size_t d = 3;
  double p_circuit = 0.0;
  std::vector<double> p_in = {0.01};
  uint64_t shots = 100000;
  uint64_t seed = 20261016;
  decoder::IterativeConfig decoder;
  std::string output_path;
  std::string format = "csv";

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

// Logarithmic grid with points_per_decade points per factor of ten,
// including both ends.
std::vector<double> log_grid(double lo, double hi, size_t points_per_decade);

// Surface-code pipeline: sample, decode iteratively, post-select. One entry
// per p_in, each with its own derived seed.
std::vector<ExperimentStats> run_distillation(const ExperimentConfig& config);

// Tableau-level pipeline, no surface code and no decoder.
std::vector<ExperimentStats> run_logical(const ExperimentConfig& config);

struct MemoryResult {
  size_t d = 0;
  size_t rounds = 0;
  double p_circuit = 0.0;
  uint64_t shots = 0;
  uint64_t errors = 0;
  double rate() const { return shots ? static_cast<double>(errors) / static_cast<double>(shots) : 0; }
  Interval interval() const { return wilson_interval(errors, shots); }
};

MemoryResult run_memory_baseline(const ExperimentConfig& config, size_t rounds);

struct SubcircuitResult {
  size_t rounds = 0;
  uint64_t shots = 0;
  std::vector<uint64_t> errors_per_observable;
  uint64_t any_failure = 0;
  ExperimentStats decode_stats;  // iteration histogram only
  double per_observable_rate() const;
  double any_failure_rate() const;
};

SubcircuitResult run_subcircuit(const ExperimentConfig& config);

// Data patches times SE rounds plus one round on each resource patch, in
// units of d^2.
uint64_t qubit_cycles(protocols::ProtocolKind kind, size_t d);

struct PatternOutcome {
  uint32_t pattern;
  bool accepted;
  bool output_error;
  int iterations_used;
};

// Decodes one noiseless shot per forced resource-error pattern.
std::vector<PatternOutcome> surface_pattern_table(protocols::ProtocolKind kind, size_t d);

}  // namespace msd::harness

#endif  // MSD_HARNESS_EXPERIMENT_H
