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

#include "msd/pauli/bitvec.h"

#include <bit>
#include <stdexcept>

#include "msd/simd/kernels.h"

namespace msd::pauli {

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {}

void BitVec::clear() {
  for (auto& w : words_) w = 0;
}

size_t BitVec::popcount() const { return simd::popcount(words_); }

bool BitVec::any() const { return simd::any(words_); }

std::vector<size_t> BitVec::ones() const {
  std::vector<size_t> out;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t word = words_[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.num_bits_ != num_bits_) {
    throw std::invalid_argument("BitVec xor: size mismatch");
  }
  simd::xor_into(words_, other.words_);
  return *this;
}

std::string BitVec::to_string() const {
  std::string s(num_bits_, '0');
  for (size_t i = 0; i < num_bits_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

}  // namespace msd::pauli
