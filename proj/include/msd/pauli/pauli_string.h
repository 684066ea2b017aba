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

#ifndef MSD_PAULI_PAULI_STRING_H
#define MSD_PAULI_PAULI_STRING_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "msd/pauli/bitvec.h"

namespace msd::pauli {

enum class GateKind : uint8_t { H, S, X, Z, CNOT };

// A single-qubit gate or a CNOT(control, target). Construct through the
// named factories; they enforce the arity invariants.
class CliffordGate {
 public:
  static CliffordGate h(size_t q) { return {GateKind::H, q, q}; }
  static CliffordGate s(size_t q) { return {GateKind::S, q, q}; }
  static CliffordGate x(size_t q) { return {GateKind::X, q, q}; }
  static CliffordGate z(size_t q) { return {GateKind::Z, q, q}; }
  static CliffordGate cnot(size_t control, size_t target);

  GateKind kind() const { return kind_; }
  size_t target() const { return a_; }
  size_t control() const { return a_; }
  size_t cnot_target() const { return b_; }
  size_t max_qubit() const { return a_ > b_ ? a_ : b_; }

  bool operator==(const CliffordGate&) const = default;

 private:
  CliffordGate(GateKind kind, size_t a, size_t b) : kind_(kind), a_(a), b_(b) {}

  GateKind kind_;
  size_t a_;
  size_t b_;
};

// i^phase * sigma(x_0,z_0) (x) ... (x) sigma(x_{n-1},z_{n-1}) with sigma(1,1) = Y.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(size_t num_qubits);

  // Accepts an optional prefix of "+", "-", "i", "+i", "-i" followed by one
  // of I/X/Y/Z (or '_' for identity) per qubit.
  static PauliString from_string(std::string_view text);
  // Pauli `p` ('X', 'Y' or 'Z') on every listed qubit, identity elsewhere.
  static PauliString on(size_t num_qubits, char p, std::initializer_list<size_t> qubits);
  static PauliString on(size_t num_qubits, char p, std::span<const size_t> qubits);

  size_t num_qubits() const { return num_qubits_; }
  bool x(size_t q) const { return xs_.get(q); }
  bool z(size_t q) const { return zs_.get(q); }
  char at(size_t q) const;
  void set(size_t q, char p);

  uint8_t phase() const { return phase_; }
  void set_phase(uint8_t log_i) { phase_ = log_i & 3; }
  // True when the phase is +1 or -1.
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  bool is_negative() const { return phase_ == 2; }

  size_t weight() const;
  bool is_identity() const { return !xs_.any() && !zs_.any(); }

  BitVec& xs() { return xs_; }
  BitVec& zs() { return zs_; }
  const BitVec& xs() const { return xs_; }
  const BitVec& zs() const { return zs_; }

  std::string to_string() const;
  bool operator==(const PauliString&) const = default;

 private:
  size_t num_qubits_ = 0;
  BitVec xs_;
  BitVec zs_;
  uint8_t phase_ = 0;
};

bool commutes(const PauliString& a, const PauliString& b);

// a * b with the phase tracked mod 4.
PauliString multiply(const PauliString& a, const PauliString& b);

// g p g^dagger.
PauliString conjugate(const CliffordGate& gate, const PauliString& p);

// In-place variant used by the tableau; returns true when the Hermitian part
// changed sign.
bool conjugate_bits(const CliffordGate& gate, BitVec& xs, BitVec& zs);

}  // namespace msd::pauli

#endif  // MSD_PAULI_PAULI_STRING_H
