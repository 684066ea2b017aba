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

#ifndef MSD_PAULI_BITVEC_H
#define MSD_PAULI_BITVEC_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace msd::pauli {

// Dense, word-packed bit vector. Bits past size() in the last word are kept
// zero so word-level popcounts and comparisons stay exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t num_bits);

  static constexpr size_t words_for(size_t num_bits) { return (num_bits + 63) / 64; }

  size_t size() const { return num_bits_; }
  size_t num_words() const { return words_.size(); }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
  bool operator[](size_t i) const { return get(i); }

  void clear();
  size_t popcount() const;
  bool any() const;
  std::vector<size_t> ones() const;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  bool operator==(const BitVec& other) const = default;

  std::span<uint64_t> words() { return words_; }
  std::span<const uint64_t> words() const { return words_; }

  std::string to_string() const;

 private:
  size_t num_bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace msd::pauli

#endif  // MSD_PAULI_BITVEC_H
