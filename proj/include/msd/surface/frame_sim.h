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

#ifndef MSD_SURFACE_FRAME_SIM_H
#define MSD_SURFACE_FRAME_SIM_H

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "msd/surface/circuit.h"

namespace msd::surface {

// Row-major bit table: one row per item (measurement, detector, ...), shots
// packed 64 to a word along the row.
class BitTable {
 public:
  BitTable() = default;
  BitTable(size_t rows, size_t words) : rows_(rows), words_(words), data_(rows * words) {}

  size_t rows() const { return rows_; }
  size_t words() const { return words_; }
  uint64_t* row(size_t r) { return data_.data() + r * words_; }
  const uint64_t* row(size_t r) const { return data_.data() + r * words_; }
  bool get(size_t r, size_t lane) const { return (row(r)[lane >> 6] >> (lane & 63)) & 1; }
  void flip(size_t r, size_t lane) { row(r)[lane >> 6] ^= uint64_t{1} << (lane & 63); }
  void clear() { std::fill(data_.begin(), data_.end(), 0); }
  void resize(size_t rows, size_t words) {
    rows_ = rows;
    words_ = words;
    data_.assign(rows * words, 0);
  }

 private:
  size_t rows_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> data_;
};

// X and Z frame planes for every qubit, lanes = 64 * words.
class PauliFrame {
 public:
  PauliFrame(size_t num_qubits, size_t words)
      : words_(words), x_(num_qubits, words), z_(num_qubits, words) {}

  size_t words() const { return words_; }
  uint64_t* x(size_t q) { return x_.row(q); }
  uint64_t* z(size_t q) { return z_.row(q); }
  void clear() {
    x_.clear();
    z_.clear();
  }
  void apply_gate(const Instruction& inst);

 private:
  size_t words_;
  BitTable x_;
  BitTable z_;
};

struct FrameOutput {
  BitTable measurements;  // flips relative to the reference sample
  BitTable detectors;
  BitTable observables;
  BitTable checks;
  BitTable frames;
};

// Bit-parallel Pauli-frame sampler.
class FrameSimulator {
 public:
  explicit FrameSimulator(const Circuit& circuit) : circuit_(circuit) {}

  // Samples 64 * words shots. Frames are re-randomised at every reset and
  // after every measurement when randomize is set, which leaves detector
  // statistics unchanged for a correctly annotated circuit.
  void run(size_t words, std::mt19937_64& rng, FrameOutput& out, bool randomize = true) const;

 private:
  const Circuit& circuit_;
};

// One noiseless measurement record from the tableau simulator. Random
// outcomes are drawn from a generator seeded with seed.
std::vector<uint8_t> reference_sample(const Circuit& circuit, uint64_t seed = 0);

// Reference parity of every frame annotation.
std::vector<uint8_t> reference_frame_parities(const Circuit& circuit,
                                              const std::vector<uint8_t>& reference);

}  // namespace msd::surface

#endif  // MSD_SURFACE_FRAME_SIM_H
