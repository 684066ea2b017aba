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

#ifndef MSD_PROTOCOLS_PROTOCOL_H
#define MSD_PROTOCOLS_PROTOCOL_H

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "msd/pauli/tableau.h"

namespace msd::protocols {

enum class ProtocolKind { SevenToOne, FifteenToOne };

std::string_view protocol_name(ProtocolKind kind);
// Accepts "7to1", "7-to-1", "15to1", "15-to-1".
ProtocolKind parse_protocol(std::string_view text);

struct CnotPair {
  size_t control;
  size_t target;
  bool operator==(const CnotPair&) const = default;
};

// Parity rule for the Clifford frame bit recorded with each shot.
struct FrameRule {
  std::vector<size_t> n_indices;  // resource readouts, 1-based data labels
  std::vector<size_t> m_indices;  // data readouts, 1-based
  bool offset_when_even;
};

// Logical-level description of a k-to-1 circuit. Data qubit 0 is the output;
// data qubits 1..k carry the code; resource r is consumed by data qubit r+1.
struct ProtocolSpec {
  ProtocolKind kind;
  size_t num_data;  // k + 1
  std::vector<pauli::Basis> init_basis;
  // One entry per CNOT time step between consecutive barriers. A step holds
  // one or two sub-layers that run back to back without a syndrome round.
  std::vector<std::vector<std::vector<CnotPair>>> cnot_steps;
  std::vector<std::pair<size_t, size_t>> consumption;  // (data qubit, resource)
  std::vector<std::vector<size_t>> checks;              // over data labels 1..k
  // Data readouts that, with the output qubit's X readout, form the
  // deterministic output observable.
  std::vector<size_t> output_support;
  FrameRule frame_rule;

  size_t num_resources() const { return num_data - 1; }
  // Barriers bracket every CNOT step plus the consumption step.
  size_t num_barriers() const { return cnot_steps.size() + 2; }
  size_t num_cnots() const;
  std::vector<CnotPair> flat_cnots() const;
};

ProtocolSpec build_protocol(ProtocolKind kind);

}  // namespace msd::protocols

#endif  // MSD_PROTOCOLS_PROTOCOL_H
