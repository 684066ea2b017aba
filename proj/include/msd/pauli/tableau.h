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

#ifndef MSD_PAULI_TABLEAU_H
#define MSD_PAULI_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "msd/pauli/pauli_string.h"

namespace msd::pauli {

enum class Basis : uint8_t { X, Z };

struct MeasureResult {
  bool outcome;
  bool deterministic;
};

struct Membership {
  bool contained;
  bool negative;  // only meaningful when contained
};

// Supplies the coin flips for non-deterministic measurements.
using RandomBitSource = std::function<bool()>;

// Aaronson-Gottesman stabilizer tableau: rows [0, n) are destabilizers, rows
// [n, 2n) stabilizers, all Hermitian with a sign bit. Starts in |0...0>.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(size_t num_qubits);

  size_t num_qubits() const { return n_; }

  void apply(const CliffordGate& gate);
  MeasureResult measure(size_t qubit, Basis basis, const RandomBitSource& rng);
  // Puts the qubit into |0> (Z) or |+> (X).
  void reset(size_t qubit, Basis basis, const RandomBitSource& rng);

  // Whether +p or -p is in the stabilizer group. Non-Hermitian p is never
  // contained.
  Membership contains(const PauliString& p) const;

  PauliString stabilizer(size_t i) const { return row(n_ + i); }
  PauliString destabilizer(size_t i) const { return row(i); }

  // Checks the symplectic pairing between destabilizer and stabilizer rows,
  // which also implies the stabilizers are independent.
  bool is_consistent() const;

 private:
  uint64_t* xrow(size_t r) { return &xs_[r * words_]; }
  uint64_t* zrow(size_t r) { return &zs_[r * words_]; }
  const uint64_t* xrow(size_t r) const { return &xs_[r * words_]; }
  const uint64_t* zrow(size_t r) const { return &zs_[r * words_]; }
  bool xbit(size_t r, size_t q) const { return (xrow(r)[q >> 6] >> (q & 63)) & 1; }
  bool zbit(size_t r, size_t q) const { return (zrow(r)[q >> 6] >> (q & 63)) & 1; }

  PauliString row(size_t r) const;
  // row h <- row i * row h
  void rowsum(size_t h, size_t i);
  bool rows_anticommute(size_t a, size_t b) const;
  MeasureResult measure_z(size_t qubit, const RandomBitSource& rng);

  size_t n_;
  size_t words_;
  std::vector<uint64_t> xs_;  // (2n + 1) rows, last one is scratch
  std::vector<uint64_t> zs_;
  std::vector<uint8_t> signs_;
};

}  // namespace msd::pauli

#endif  // MSD_PAULI_TABLEAU_H
