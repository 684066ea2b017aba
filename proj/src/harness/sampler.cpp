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

#include "msd/harness/sampler.h"

#include <bit>
#include <stdexcept>

namespace msd::harness {

std::mt19937_64 block_rng(uint64_t seed, uint64_t block) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(block), static_cast<uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

BlockSampler::BlockSampler(const surface::Circuit& circuit, uint64_t seed)
    : circuit_(circuit), seed_(seed), sim_(circuit) {
  if (circuit.num_frames() > 0) {
    frame_reference_ = surface::reference_frame_parities(circuit, reference());
  }
}

const std::vector<uint8_t>& BlockSampler::reference() const {
  if (!have_reference_) {
    reference_ = surface::reference_sample(circuit_);
    have_reference_ = true;
  }
  return reference_;
}

void BlockSampler::sample_block(uint64_t block, surface::FrameOutput& out) const {
  auto rng = block_rng(seed_, block);
  sim_.run(kBlockWords, rng, out);
  for (size_t f = 0; f < frame_reference_.size(); ++f) {
    if (!frame_reference_[f]) continue;
    uint64_t* row = out.frames.row(f);
    for (size_t w = 0; w < kBlockWords; ++w) row[w] = ~row[w];
  }
}

namespace {

void copy_rows(const surface::BitTable& src, surface::BitTable& dst, size_t word_offset,
               size_t words, const std::vector<uint8_t>* invert) {
  for (size_t r = 0; r < src.rows(); ++r) {
    const uint64_t* s = src.row(r);
    uint64_t* d = dst.row(r) + word_offset;
    uint64_t flip = invert && (*invert)[r] ? ~uint64_t{0} : 0;
    for (size_t w = 0; w < words; ++w) d[w] = s[w] ^ flip;
  }
}

void mask_tail(surface::BitTable& t, size_t shots) {
  if (shots % 64 == 0) return;
  uint64_t keep = (uint64_t{1} << (shots % 64)) - 1;
  for (size_t r = 0; r < t.rows(); ++r) t.row(r)[t.words() - 1] &= keep;
}

}  // namespace

ShotBatch sample(const surface::Circuit& circuit, size_t shots, uint64_t seed,
                 bool keep_measurements) {
  ShotBatch batch;
  batch.num_shots = shots;
  const size_t words = (shots + 63) / 64;
  batch.detectors.resize(circuit.num_detectors(), words);
  batch.observables.resize(circuit.num_observables(), words);
  batch.checks.resize(circuit.num_checks(), words);
  batch.frames.resize(circuit.num_frames(), words);
  if (keep_measurements) batch.measurements.resize(circuit.num_measurements(), words);
  BlockSampler sampler(circuit, seed);
  const std::vector<uint8_t>* ref = keep_measurements ? &sampler.reference() : nullptr;
  surface::FrameOutput out;
  for (uint64_t b = 0; b * kBlockShots < shots; ++b) {
    sampler.sample_block(b, out);
    const size_t offset = b * kBlockWords;
    const size_t n = std::min(kBlockWords, words - offset);
    copy_rows(out.detectors, batch.detectors, offset, n, nullptr);
    copy_rows(out.observables, batch.observables, offset, n, nullptr);
    copy_rows(out.checks, batch.checks, offset, n, nullptr);
    copy_rows(out.frames, batch.frames, offset, n, nullptr);
    if (keep_measurements) copy_rows(out.measurements, batch.measurements, offset, n, ref);
  }
  mask_tail(batch.detectors, shots);
  mask_tail(batch.observables, shots);
  mask_tail(batch.checks, shots);
  mask_tail(batch.frames, shots);
  if (keep_measurements) mask_tail(batch.measurements, shots);
  return batch;
}

void fired_detectors(const surface::BitTable& detectors, size_t lanes,
                     std::vector<std::vector<uint32_t>>& out) {
  out.resize(lanes);
  for (auto& v : out) v.clear();
  const size_t words = std::min(detectors.words(), (lanes + 63) / 64);
  for (size_t d = 0; d < detectors.rows(); ++d) {
    const uint64_t* row = detectors.row(d);
    for (size_t w = 0; w < words; ++w) {
      uint64_t bits = row[w];
      while (bits) {
        size_t lane = w * 64 + static_cast<size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (lane < lanes) out[lane].push_back(static_cast<uint32_t>(d));
      }
    }
  }
}

uint64_t lane_mask(const surface::BitTable& table, size_t lane) {
  if (table.rows() > 64) throw std::invalid_argument("more than 64 rows");
  uint64_t m = 0;
  for (size_t r = 0; r < table.rows(); ++r) m |= static_cast<uint64_t>(table.get(r, lane)) << r;
  return m;
}

}  // namespace msd::harness
