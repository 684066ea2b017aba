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

#include "msd/pauli/tableau.h"

#include <algorithm>
#include <stdexcept>

#include "msd/simd/kernels.h"

namespace msd::pauli {

StabilizerTableau::StabilizerTableau(size_t num_qubits)
    : n_(num_qubits),
      words_(BitVec::words_for(num_qubits)),
      xs_((2 * num_qubits + 1) * words_, 0),
      zs_((2 * num_qubits + 1) * words_, 0),
      signs_(2 * num_qubits + 1, 0) {
  for (size_t q = 0; q < n_; ++q) {
    xrow(q)[q >> 6] |= uint64_t{1} << (q & 63);
    zrow(n_ + q)[q >> 6] |= uint64_t{1} << (q & 63);
  }
}

PauliString StabilizerTableau::row(size_t r) const {
  PauliString p(n_);
  std::copy_n(xrow(r), words_, p.xs().words().data());
  std::copy_n(zrow(r), words_, p.zs().words().data());
  p.set_phase(signs_[r] ? 2 : 0);
  return p;
}

bool StabilizerTableau::rows_anticommute(size_t a, size_t b) const {
  return simd::active().symplectic_parity(xrow(a), zrow(a), xrow(b), zrow(b), words_);
}

void StabilizerTableau::rowsum(size_t h, size_t i) {
  uint8_t log_i = simd::active().product_log_i(xrow(i), zrow(i), xrow(h), zrow(h), words_);
  uint8_t total = (2 * signs_[h] + 2 * signs_[i] + log_i) & 3;
  signs_[h] = total >> 1;
  simd::active().xor_into(xrow(h), xrow(i), words_);
  simd::active().xor_into(zrow(h), zrow(i), words_);
}

void StabilizerTableau::apply(const CliffordGate& gate) {
  if (gate.max_qubit() >= n_) throw std::out_of_range("gate qubit out of range");
  const size_t rows = 2 * n_;
  const size_t q = gate.target();
  const size_t w = q >> 6;
  const uint64_t m = uint64_t{1} << (q & 63);
  switch (gate.kind()) {
    case GateKind::H:
      for (size_t r = 0; r < rows; ++r) {
        uint64_t& x = xrow(r)[w];
        uint64_t& z = zrow(r)[w];
        bool xb = x & m, zb = z & m;
        if (xb && zb) signs_[r] ^= 1;
        if (xb != zb) {
          x ^= m;
          z ^= m;
        }
      }
      break;
    case GateKind::S:
      for (size_t r = 0; r < rows; ++r) {
        uint64_t& z = zrow(r)[w];
        bool xb = xrow(r)[w] & m, zb = z & m;
        if (xb && zb) signs_[r] ^= 1;
        if (xb) z ^= m;
      }
      break;
    case GateKind::X:
      for (size_t r = 0; r < rows; ++r) {
        if (zrow(r)[w] & m) signs_[r] ^= 1;
      }
      break;
    case GateKind::Z:
      for (size_t r = 0; r < rows; ++r) {
        if (xrow(r)[w] & m) signs_[r] ^= 1;
      }
      break;
    case GateKind::CNOT: {
      const size_t c = gate.control(), t = gate.cnot_target();
      const size_t wc = c >> 6, wt = t >> 6;
      const uint64_t mc = uint64_t{1} << (c & 63), mt = uint64_t{1} << (t & 63);
      for (size_t r = 0; r < rows; ++r) {
        uint64_t* x = xrow(r);
        uint64_t* z = zrow(r);
        bool xc = x[wc] & mc, zc = z[wc] & mc, xt = x[wt] & mt, zt = z[wt] & mt;
        if (xc && zt && xt == zc) signs_[r] ^= 1;
        if (xc) x[wt] ^= mt;
        if (zt) z[wc] ^= mc;
      }
      break;
    }
  }
}

MeasureResult StabilizerTableau::measure_z(size_t a, const RandomBitSource& rng) {
  const size_t rows = 2 * n_;
  size_t p = rows;
  for (size_t r = n_; r < rows; ++r) {
    if (xbit(r, a)) {
      p = r;
      break;
    }
  }
  if (p != rows) {
    for (size_t r = 0; r < rows; ++r) {
      if (r != p && xbit(r, a)) rowsum(r, p);
    }
    const size_t d = p - n_;
    std::copy_n(xrow(p), words_, xrow(d));
    std::copy_n(zrow(p), words_, zrow(d));
    signs_[d] = signs_[p];
    std::fill_n(xrow(p), words_, 0);
    std::fill_n(zrow(p), words_, 0);
    zrow(p)[a >> 6] |= uint64_t{1} << (a & 63);
    bool outcome = rng();
    signs_[p] = outcome;
    return {outcome, false};
  }
  const size_t scratch = rows;
  std::fill_n(xrow(scratch), words_, 0);
  std::fill_n(zrow(scratch), words_, 0);
  signs_[scratch] = 0;
  for (size_t i = 0; i < n_; ++i) {
    if (xbit(i, a)) rowsum(scratch, i + n_);
  }
  return {signs_[scratch] != 0, true};
}

MeasureResult StabilizerTableau::measure(size_t qubit, Basis basis,
                                         const RandomBitSource& rng) {
  if (qubit >= n_) throw std::out_of_range("measured qubit out of range");
  if (basis == Basis::Z) return measure_z(qubit, rng);
  apply(CliffordGate::h(qubit));
  MeasureResult r = measure_z(qubit, rng);
  apply(CliffordGate::h(qubit));
  return r;
}

void StabilizerTableau::reset(size_t qubit, Basis basis, const RandomBitSource& rng) {
  if (qubit >= n_) throw std::out_of_range("reset qubit out of range");
  MeasureResult r = measure_z(qubit, rng);
  if (r.outcome) apply(CliffordGate::x(qubit));
  if (basis == Basis::X) apply(CliffordGate::h(qubit));
}

Membership StabilizerTableau::contains(const PauliString& p) const {
  if (p.num_qubits() != n_) throw std::invalid_argument("Pauli size mismatch");
  if (!p.is_hermitian()) return {false, false};
  const auto& k = simd::active();
  const uint64_t* px = p.xs().words().data();
  const uint64_t* pz = p.zs().words().data();
  for (size_t i = 0; i < n_; ++i) {
    if (k.symplectic_parity(xrow(n_ + i), zrow(n_ + i), px, pz, words_)) {
      return {false, false};
    }
  }
  // p commutes with the whole group, so it equals +-(product of the
  // stabilizers whose destabilizer partner anticommutes with it).
  PauliString acc(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (k.symplectic_parity(xrow(i), zrow(i), px, pz, words_)) {
      acc = multiply(acc, row(n_ + i));
    }
  }
  if (acc.xs() != p.xs() || acc.zs() != p.zs()) return {false, false};
  return {true, acc.phase() != p.phase()};
}

bool StabilizerTableau::is_consistent() const {
  const size_t rows = 2 * n_;
  for (size_t a = 0; a < rows; ++a) {
    for (size_t b = a + 1; b < rows; ++b) {
      bool expect_anti = (b == a + n_);
      if (rows_anticommute(a, b) != expect_anti) return false;
    }
  }
  return true;
}

}  // namespace msd::pauli
