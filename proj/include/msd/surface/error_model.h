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

#ifndef MSD_SURFACE_ERROR_MODEL_H
#define MSD_SURFACE_ERROR_MODEL_H

#include <cstdint>
#include <vector>

#include "msd/surface/circuit.h"

namespace msd::surface {

enum class FaultKind : uint8_t { kX, kZ, kMeasurementFlip, kInjection };

struct ErrorMechanism {
  uint32_t id = 0;
  uint32_t instruction = 0;
  FaultKind kind = FaultKind::kX;
  uint32_t location = 0;  // qubit, or measurement index for flips
  uint32_t channel = 0;   // noise channel the fault belongs to
  double probability = 0.0;
  std::vector<uint32_t> detectors;  // sorted
  uint64_t observables = 0;
  uint64_t checks = 0;
  uint64_t frames = 0;

  bool same_signature(const ErrorMechanism& o) const {
    return detectors == o.detectors && observables == o.observables && checks == o.checks &&
           frames == o.frames;
  }
};

struct DetectorErrorModel {
  size_t num_detectors = 0;
  size_t num_channels = 0;
  // One entry per X or Z component of every depolarizing target, per
  // measurement flip and per injection event. Probability is the marginal
  // rate of the component: 2p/3 for one-qubit and 8p/15 for two-qubit
  // depolarizing.
  std::vector<ErrorMechanism> components;
  // Components with at least one detector, merged by identical signature.
  std::vector<ErrorMechanism> mechanisms;
};

// Propagates every elementary fault through the noiseless circuit.
DetectorErrorModel enumerate_error_mechanisms(const Circuit& circuit);

// Exact marginal flip probability of each detector under the true channels.
std::vector<double> exact_detector_probabilities(const DetectorErrorModel& dem);

// q1 (1 - q2) + q2 (1 - q1)
double combine_probabilities(double q1, double q2);

}  // namespace msd::surface

#endif  // MSD_SURFACE_ERROR_MODEL_H
