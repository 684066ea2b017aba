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

#ifndef MSD_SURFACE_BUILDERS_H
#define MSD_SURFACE_BUILDERS_H

#include <cstdint>
#include <optional>
#include <vector>

#include "msd/protocols/protocol.h"
#include "msd/surface/circuit.h"
#include "msd/surface/layout.h"

namespace msd::surface {

struct NoiseModel {
  double p_circuit = 0.0;
  double p_in = 0.0;
};

// Assembles multi-patch circuits. Each patch owns a contiguous block of
// 2d^2 - 1 qubits (data first). Plaquette values are tracked as parities of
// earlier measurements so that every emitted detector is deterministic.
class PatchCircuitBuilder {
 public:
  PatchCircuitBuilder(size_t d, size_t num_patches, double p_circuit);

  const PatchLayout& layout() const { return layout_; }
  Circuit& circuit() { return circuit_; }
  Circuit take() { return std::move(circuit_); }

  uint32_t data_qubit(size_t patch, size_t i) const;
  uint32_t ancilla_qubit(size_t patch, size_t plaquette) const;

  // Data-qubit reset of whole patches. A noisy reset gets depolarizing noise.
  void init_patches(const std::vector<size_t>& patches, pauli::Basis basis, bool noisy = true);
  // Noiseless logical Z (Z on the logical Z chain).
  void logical_z(size_t patch);
  // Logical Z with probability p, one event per shot.
  void inject_logical_z(size_t patch, double p);
  // One syndrome-extraction round over the listed patches in parallel.
  void se_round(const std::vector<size_t>& patches);
  // Noiseless, instantaneous transversal CNOT.
  void transversal_cnot(size_t control, size_t target);
  // Transversal data measurement; returns measurement index per data qubit.
  std::vector<uint32_t> measure_patch(size_t patch, pauli::Basis basis);

  // Measurement indices on the logical chain of the given basis.
  std::vector<uint32_t> logical_chain(const std::vector<uint32_t>& data_meas,
                                      pauli::Basis basis) const;

 private:
  using Expr = std::optional<std::vector<uint32_t>>;
  static void xor_expr(Expr& into, const Expr& other);

  size_t d_;
  double p_;
  PatchLayout layout_;
  Circuit circuit_;
  std::vector<std::vector<Expr>> plaquette_expr_;  // [patch][plaquette]
  std::vector<bool> live_;
};

// Single-patch circuit holding one noisy round (qubits declared, no
// detectors).
Circuit build_se_round(const PatchLayout& patch, const NoiseModel& noise);

// Physical CNOT pairs (control, target) for a transversal CNOT between two
// patches laid out back to back.
std::vector<std::pair<uint32_t, uint32_t>> build_transversal_cnot(const PatchLayout& control,
                                                                  const PatchLayout& target);

// Memory experiment: init, rounds, transversal readout, one logical
// observable. basis selects |0> / Z-logical or |+> / X-logical.
Circuit build_memory_circuit(size_t d, size_t rounds, const NoiseModel& noise,
                             pauli::Basis basis = pauli::Basis::Z);

// Full distillation circuit. Data patch j is patch j; resource r is patch
// num_data + r. Observable 0 is the output; checks follow spec.checks; frame
// 0 is the frame-rule parity. When forced_pattern is set, resource r receives
// its logical Z error iff bit r is set, and p_in is ignored.
Circuit build_distillation_circuit(const protocols::ProtocolSpec& spec, size_t d,
                                   const NoiseModel& noise,
                                   std::optional<uint32_t> forced_pattern = std::nullopt);

// CNOT portion of the distillation circuit followed by the noiseless inverse
// network and a readout of every data patch in its init basis. Observable j
// belongs to patch j.
Circuit build_cnot_subcircuit_experiment(const protocols::ProtocolSpec& spec, size_t d,
                                         const NoiseModel& noise);

// SE rounds seen by each data patch in the CNOT sub-circuit.
size_t subcircuit_rounds(const protocols::ProtocolSpec& spec);

}  // namespace msd::surface

#endif  // MSD_SURFACE_BUILDERS_H
