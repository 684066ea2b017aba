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

#include "msd/pauli/pauli_string.h"

#include <stdexcept>

#include "msd/simd/kernels.h"

namespace msd::pauli {

CliffordGate CliffordGate::cnot(size_t control, size_t target) {
  if (control == target) {
    throw std::invalid_argument("CNOT needs two distinct qubits");
  }
  return {GateKind::CNOT, control, target};
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(num_qubits), zs_(num_qubits) {}

PauliString PauliString::from_string(std::string_view text) {
  uint8_t phase = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (!text.empty() && text.front() == '-') {
    phase = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = (phase + 1) & 3;
    text.remove_prefix(1);
  }
  PauliString out(text.size());
  for (size_t q = 0; q < text.size(); ++q) out.set(q, text[q]);
  out.phase_ = phase;
  return out;
}

PauliString PauliString::on(size_t num_qubits, char p,
                            std::initializer_list<size_t> qubits) {
  return on(num_qubits, p, std::span<const size_t>(qubits.begin(), qubits.size()));
}

PauliString PauliString::on(size_t num_qubits, char p, std::span<const size_t> qubits) {
  PauliString out(num_qubits);
  for (size_t q : qubits) {
    if (q >= num_qubits) throw std::out_of_range("Pauli qubit index out of range");
    out.set(q, p);
  }
  return out;
}

char PauliString::at(size_t q) const {
  static constexpr char kNames[4] = {'I', 'X', 'Z', 'Y'};
  return kNames[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

void PauliString::set(size_t q, char p) {
  bool xb = false, zb = false;
  switch (p) {
    case 'I':
    case '_':
      break;
    case 'X':
      xb = true;
      break;
    case 'Y':
      xb = zb = true;
      break;
    case 'Z':
      zb = true;
      break;
    default:
      throw std::invalid_argument(std::string("not a Pauli: ") + p);
  }
  xs_.set(q, xb);
  zs_.set(q, zb);
}

size_t PauliString::weight() const {
  BitVec support = xs_;
  for (size_t w = 0; w < support.num_words(); ++w) {
    support.words()[w] |= zs_.words()[w];
  }
  return support.popcount();
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  for (size_t q = 0; q < num_qubits_; ++q) s += at(q) == 'I' ? '_' : at(q);
  return s;
}

namespace {
void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("Pauli strings act on different qubit counts");
  }
}
}  // namespace

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const auto& k = simd::active();
  return !k.symplectic_parity(a.xs().words().data(), a.zs().words().data(),
                              b.xs().words().data(), b.zs().words().data(),
                              a.xs().num_words());
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const auto& k = simd::active();
  uint8_t log_i = k.product_log_i(a.xs().words().data(), a.zs().words().data(),
                                  b.xs().words().data(), b.zs().words().data(),
                                  a.xs().num_words());
  PauliString out = a;
  out.xs() ^= b.xs();
  out.zs() ^= b.zs();
  out.set_phase(a.phase() + b.phase() + log_i);
  return out;
}

bool conjugate_bits(const CliffordGate& gate, BitVec& xs, BitVec& zs) {
  if (gate.max_qubit() >= xs.size()) {
    throw std::out_of_range("gate acts outside the Pauli string");
  }
  size_t q = gate.target();
  bool xq = xs.get(q), zq = zs.get(q);
  switch (gate.kind()) {
    case GateKind::H:
      xs.set(q, zq);
      zs.set(q, xq);
      return xq && zq;
    case GateKind::S:
      // X -> Y, Y -> -X.
      if (xq) zs.set(q, !zq);
      return xq && zq;
    case GateKind::X:
      return zq;
    case GateKind::Z:
      return xq;
    case GateKind::CNOT: {
      size_t c = gate.control(), t = gate.cnot_target();
      bool xc = xs.get(c), zc = zs.get(c), xt = xs.get(t), zt = zs.get(t);
      bool flip = xc && zt && !(xt ^ zc);
      xs.set(t, xt ^ xc);
      zs.set(c, zc ^ zt);
      return flip;
    }
  }
  return false;
}

PauliString conjugate(const CliffordGate& gate, const PauliString& p) {
  PauliString out = p;
  if (conjugate_bits(gate, out.xs(), out.zs())) out.set_phase(out.phase() + 2);
  return out;
}

}  // namespace msd::pauli
