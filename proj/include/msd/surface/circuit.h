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

#ifndef MSD_SURFACE_CIRCUIT_H
#define MSD_SURFACE_CIRCUIT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "msd/pauli/tableau.h"

namespace msd::surface {

enum class OpCode : uint8_t {
  kR,       // reset to |0>
  kRX,      // reset to |+>
  kH,
  kS,
  kX,
  kZ,
  kCX,      // targets are (control, target) pairs
  kDepolarize1,
  kDepolarize2,
  kM,       // Z-basis measurement, p = flip probability
  kMX,
  kInjectZ, // with probability p, Z on every target (one event per shot)
  kTick,
  kDetector,    // arg = home patch, targets = measurement indices
  kObservable,  // arg = observable id
  kCheck,       // arg = check id
  kFrame,       // arg = frame id; parity that is random but tracked
};

std::string_view opcode_name(OpCode op);

struct Instruction {
  OpCode op;
  double p = 0.0;
  uint32_t arg = 0;
  std::vector<uint32_t> targets;
};

struct QubitInfo {
  uint32_t patch;
  int x;
  int y;
};

bool is_noise(OpCode op);
bool is_annotation(OpCode op);

// Instruction stream over numbered qubits grouped into patches. Measurement
// indices are assigned in order of appearance.
class Circuit {
 public:
  uint32_t add_qubit(QubitInfo info);

  void reset(pauli::Basis basis, const std::vector<uint32_t>& qubits);
  void gate(OpCode op, const std::vector<uint32_t>& qubits);
  void cx(const std::vector<uint32_t>& pairs);
  // No-ops when p == 0 or there are no targets.
  void depolarize1(double p, const std::vector<uint32_t>& qubits);
  void depolarize2(double p, const std::vector<uint32_t>& pairs);
  void inject_z(double p, const std::vector<uint32_t>& qubits);
  // Returns the index of the first measurement.
  uint32_t measure(pauli::Basis basis, double p, const std::vector<uint32_t>& qubits);
  void tick();
  uint32_t detector(uint32_t home_patch, std::vector<uint32_t> measurements);
  void observable(uint32_t id, std::vector<uint32_t> measurements);
  void check(uint32_t id, std::vector<uint32_t> measurements);
  void frame(uint32_t id, std::vector<uint32_t> measurements);

  // Raw append with validation; used by the parser.
  void append(Instruction inst);

  const std::vector<Instruction>& instructions() const { return instructions_; }
  const std::vector<QubitInfo>& qubits() const { return qubits_; }
  size_t num_qubits() const { return qubits_.size(); }
  size_t num_measurements() const { return num_measurements_; }
  size_t num_detectors() const { return detector_home_.size(); }
  size_t num_observables() const { return num_observables_; }
  size_t num_checks() const { return num_checks_; }
  size_t num_frames() const { return num_frames_; }
  size_t num_patches() const { return num_patches_; }
  const std::vector<uint32_t>& detector_home() const { return detector_home_; }
  size_t count_ops(OpCode op) const;

  std::string to_text() const;
  static Circuit from_text(std::string_view text);

  bool operator==(const Circuit& other) const { return to_text() == other.to_text(); }

 private:
  void check_qubits(const std::vector<uint32_t>& qubits) const;
  void check_measurements(const std::vector<uint32_t>& ms) const;

  std::vector<QubitInfo> qubits_;
  std::vector<Instruction> instructions_;
  std::vector<uint32_t> detector_home_;
  size_t num_measurements_ = 0;
  size_t num_observables_ = 0;
  size_t num_checks_ = 0;
  size_t num_frames_ = 0;
  size_t num_patches_ = 0;
};

}  // namespace msd::surface

#endif  // MSD_SURFACE_CIRCUIT_H
