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

#include <immintrin.h>
#include <nmmintrin.h>

#include <bit>

#include "msd/simd/kernels.h"

namespace msd::simd {
namespace {

constexpr size_t kLanes = 4;

inline __m256i load(const uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

inline uint64_t popcount256(__m256i v) {
  return _mm_popcnt_u64(static_cast<uint64_t>(_mm256_extract_epi64(v, 0))) +
         _mm_popcnt_u64(static_cast<uint64_t>(_mm256_extract_epi64(v, 1))) +
         _mm_popcnt_u64(static_cast<uint64_t>(_mm256_extract_epi64(v, 2))) +
         _mm_popcnt_u64(static_cast<uint64_t>(_mm256_extract_epi64(v, 3)));
}

void xor_into_avx2(uint64_t* dst, const uint64_t* src, size_t n) {
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void cx_avx2(uint64_t* xc, uint64_t* zc, uint64_t* xt, uint64_t* zt,
             size_t n) {
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(xt + i, _mm256_xor_si256(load(xt + i), load(xc + i)));
    store(zc + i, _mm256_xor_si256(load(zc + i), load(zt + i)));
  }
  for (; i < n; ++i) {
    xt[i] ^= xc[i];
    zc[i] ^= zt[i];
  }
}

void swap_avx2(uint64_t* a, uint64_t* b, size_t n) {
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i va = load(a + i);
    store(a + i, load(b + i));
    store(b + i, va);
  }
  for (; i < n; ++i) {
    uint64_t t = a[i];
    a[i] = b[i];
    b[i] = t;
  }
}

uint64_t popcount_avx2(const uint64_t* a, size_t n) {
  uint64_t total = 0;
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) total += popcount256(load(a + i));
  for (; i < n; ++i) total += _mm_popcnt_u64(a[i]);
  return total;
}

bool any_avx2(const uint64_t* a, size_t n) {
  size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLanes <= n; i += kLanes) acc = _mm256_or_si256(acc, load(a + i));
  if (!_mm256_testz_si256(acc, acc)) return true;
  for (; i < n; ++i) {
    if (a[i]) return true;
  }
  return false;
}

bool symplectic_parity_avx2(const uint64_t* x1, const uint64_t* z1,
                            const uint64_t* x2, const uint64_t* z2, size_t n) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i t = _mm256_xor_si256(_mm256_and_si256(load(x1 + i), load(z2 + i)),
                                 _mm256_and_si256(load(z1 + i), load(x2 + i)));
    acc = _mm256_xor_si256(acc, t);
  }
  uint64_t parity = popcount256(acc);
  for (; i < n; ++i) parity += _mm_popcnt_u64((x1[i] & z2[i]) ^ (z1[i] & x2[i]));
  return parity & 1;
}

uint8_t product_log_i_avx2(const uint64_t* x1, const uint64_t* z1,
                           const uint64_t* x2, const uint64_t* z2, size_t n) {
  uint64_t plus = 0;
  uint64_t minus = 0;
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i a = load(x1 + i), b = load(z1 + i), c = load(x2 + i),
            d = load(z2 + i);
    // andnot(u, v) = ~u & v
    __m256i ab_ = _mm256_andnot_si256(b, a);   // a & ~b : X on left
    __m256i ab = _mm256_and_si256(a, b);       // Y on left
    __m256i a_b = _mm256_andnot_si256(a, b);   // Z on left
    __m256i cd_ = _mm256_andnot_si256(d, c);   // X on right
    __m256i cd = _mm256_and_si256(c, d);       // Y on right
    __m256i c_d = _mm256_andnot_si256(c, d);   // Z on right
    __m256i p = _mm256_or_si256(
        _mm256_or_si256(_mm256_and_si256(ab_, cd), _mm256_and_si256(ab, c_d)),
        _mm256_and_si256(a_b, cd_));
    __m256i m = _mm256_or_si256(
        _mm256_or_si256(_mm256_and_si256(ab, cd_), _mm256_and_si256(a_b, cd)),
        _mm256_and_si256(ab_, c_d));
    plus += popcount256(p);
    minus += popcount256(m);
  }
  for (; i < n; ++i) {
    uint64_t a = x1[i], b = z1[i], c = x2[i], d = z2[i];
    uint64_t p = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
    uint64_t m = (a & b & c & ~d) | (~a & b & c & d) | (a & ~b & ~c & d);
    plus += _mm_popcnt_u64(p);
    minus += _mm_popcnt_u64(m);
  }
  return static_cast<uint8_t>((plus + 3 * minus) & 3);
}

}  // namespace

const KernelTable* avx2_kernels_compiled() {
  static const KernelTable table{
      "avx2",    xor_into_avx2,          cx_avx2,
      swap_avx2, popcount_avx2,          any_avx2,
      symplectic_parity_avx2, product_log_i_avx2,
  };
  return &table;
}

}  // namespace msd::simd
