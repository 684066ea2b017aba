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

#ifndef MSD_SIMD_KERNELS_H
#define MSD_SIMD_KERNELS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Word-parallel bit kernels used by the Pauli algebra and the frame
// simulator. Every kernel has a portable scalar reference; vector variants
// are selected once at startup from what the CPU reports.
namespace msd::simd {

struct KernelTable {
  std::string_view name;
  // dst ^= src
  void (*xor_into)(uint64_t* dst, const uint64_t* src, size_t n);
  // Transversal CNOT on frame words: xt ^= xc, zc ^= zt.
  void (*cx)(uint64_t* xc, uint64_t* zc, uint64_t* xt, uint64_t* zt, size_t n);
  void (*swap)(uint64_t* a, uint64_t* b, size_t n);
  uint64_t (*popcount)(const uint64_t* a, size_t n);
  bool (*any)(const uint64_t* a, size_t n);
  // Parity of the symplectic product <(x1,z1),(x2,z2)>.
  bool (*symplectic_parity)(const uint64_t* x1, const uint64_t* z1,
                            const uint64_t* x2, const uint64_t* z2, size_t n);
  // Power of i (mod 4) picked up by the qubit-wise product
  // sigma(x1,z1) * sigma(x2,z2), with sigma(1,1) = Y.
  uint8_t (*product_log_i)(const uint64_t* x1, const uint64_t* z1,
                           const uint64_t* x2, const uint64_t* z2, size_t n);
};

const KernelTable& scalar_kernels();

// Null when the build or the running CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Table chosen at first use. MSD_SIMD=scalar in the environment forces the
// reference path.
const KernelTable& active();

inline void xor_into(std::span<uint64_t> dst, std::span<const uint64_t> src) {
  active().xor_into(dst.data(), src.data(), dst.size());
}

inline uint64_t popcount(std::span<const uint64_t> a) {
  return active().popcount(a.data(), a.size());
}

inline bool any(std::span<const uint64_t> a) {
  return active().any(a.data(), a.size());
}

}  // namespace msd::simd

#endif  // MSD_SIMD_KERNELS_H
