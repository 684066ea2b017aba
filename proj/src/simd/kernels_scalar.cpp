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

#include <bit>

#include "msd/simd/kernels.h"

namespace msd::simd {
namespace {

void xor_into_scalar(uint64_t* dst, const uint64_t* src, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void cx_scalar(uint64_t* xc, uint64_t* zc, uint64_t* xt, uint64_t* zt,
               size_t n) {
  for (size_t i = 0; i < n; ++i) {
    xt[i] ^= xc[i];
    zc[i] ^= zt[i];
  }
}

void swap_scalar(uint64_t* a, uint64_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    uint64_t t = a[i];
    a[i] = b[i];
    b[i] = t;
  }
}

uint64_t popcount_scalar(const uint64_t* a, size_t n) {
  uint64_t total = 0;
  for (size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

bool any_scalar(const uint64_t* a, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (a[i]) return true;
  }
  return false;
}

bool symplectic_parity_scalar(const uint64_t* x1, const uint64_t* z1,
                              const uint64_t* x2, const uint64_t* z2,
                              size_t n) {
  uint64_t acc = 0;
  for (size_t i = 0; i < n; ++i) acc ^= (x1[i] & z2[i]) ^ (z1[i] & x2[i]);
  return std::popcount(acc) & 1;
}

uint8_t product_log_i_scalar(const uint64_t* x1, const uint64_t* z1,
                             const uint64_t* x2, const uint64_t* z2,
                             size_t n) {
  // +i: XY, YZ, ZX.  -i: YX, ZY, XZ.
  uint64_t plus = 0;
  uint64_t minus = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t a = x1[i], b = z1[i], c = x2[i], d = z2[i];
    uint64_t p = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
    uint64_t m = (a & b & c & ~d) | (~a & b & c & d) | (a & ~b & ~c & d);
    plus += std::popcount(p);
    minus += std::popcount(m);
  }
  return static_cast<uint8_t>((plus + 3 * minus) & 3);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",         xor_into_scalar,          cx_scalar,
      swap_scalar,      popcount_scalar,          any_scalar,
      symplectic_parity_scalar, product_log_i_scalar,
  };
  return table;
}

}  // namespace msd::simd
