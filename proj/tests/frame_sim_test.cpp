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


#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "msd/harness/sampler.h"
#include "msd/protocols/protocol.h"
#include "msd/surface/builders.h"
#include "msd/surface/frame_sim.h"

namespace msd::surface {
namespace {

using pauli::Basis;
using protocols::build_protocol;
using protocols::ProtocolKind;

size_t row_popcount(const BitTable& t, size_t r) {
  size_t n = 0;
  for (size_t w = 0; w < t.words(); ++w) n += std::popcount(t.row(r)[w]);
  return n;
}

size_t total_popcount(const BitTable& t) {
  size_t n = 0;
  for (size_t r = 0; r < t.rows(); ++r) n += row_popcount(t, r);
  return n;
}

void expect_rate(size_t hits, size_t shots, double p) {
  double sigma = std::sqrt(p * (1 - p) / shots);
  EXPECT_NEAR(static_cast<double>(hits) / shots, p, 5 * sigma);
}

TEST(BitTable, GetAndFlip) {
  BitTable t(3, 2);
  t.flip(1, 70);
  EXPECT_TRUE(t.get(1, 70));
  EXPECT_FALSE(t.get(1, 6));
  EXPECT_EQ(t.row(1)[1], uint64_t{1} << 6);
  t.clear();
  EXPECT_EQ(total_popcount(t), 0u);
}

TEST(FrameSimulator, NoiselessMemoryIsQuiet) {
  for (auto basis : {Basis::Z, Basis::X}) {
    auto c = build_memory_circuit(3, 3, {0, 0}, basis);
    FrameSimulator sim(c);
    FrameOutput out;
    std::mt19937_64 rng(7);
    sim.run(4, rng, out);
    EXPECT_EQ(total_popcount(out.detectors), 0u);
    EXPECT_EQ(total_popcount(out.observables), 0u);
    // Randomised frames still scramble the raw X-type readouts.
    EXPECT_GT(total_popcount(out.measurements), 0u);
  }
}

TEST(FrameSimulator, NoiselessDistillationIsQuiet) {
  for (auto kind : {ProtocolKind::SevenToOne, ProtocolKind::FifteenToOne}) {
    auto c = build_distillation_circuit(build_protocol(kind), 3, {0, 0});
    auto batch = harness::sample(c, 200, 11);
    EXPECT_EQ(total_popcount(batch.detectors), 0u);
    EXPECT_EQ(total_popcount(batch.observables), 0u);
    EXPECT_EQ(total_popcount(batch.checks), 0u);
  }
}

TEST(FrameSimulator, AllResourcesFaultyIsAcceptedAndWrong) {
  auto c = build_distillation_circuit(build_protocol(ProtocolKind::SevenToOne), 3, {0, 1.0});
  auto batch = harness::sample(c, 300, 12);
  EXPECT_EQ(total_popcount(batch.detectors), 0u);
  EXPECT_EQ(total_popcount(batch.checks), 0u);
  EXPECT_EQ(row_popcount(batch.observables, 0), 300u);
}

TEST(FrameSimulator, FrameParityMatchesLogicalRule) {
  // The frame bit is random per shot but must match its own reference rule,
  // so it should be balanced.
  auto c = build_distillation_circuit(build_protocol(ProtocolKind::SevenToOne), 3, {0, 0});
  auto batch = harness::sample(c, 4096, 13);
  expect_rate(row_popcount(batch.frames, 0), 4096, 0.5);
}

Circuit two_qubits() {
  Circuit c;
  c.add_qubit({0, 1, 1});
  c.add_qubit({0, 3, 1});
  return c;
}

TEST(FrameSimulator, MeasurementFlipRate) {
  auto c = two_qubits();
  c.reset(Basis::Z, {0, 1});
  c.measure(Basis::Z, 0.2, {0});
  c.measure(Basis::X, 0.0, {1});
  c.detector(0, {0});
  auto batch = harness::sample(c, 64 * 1000, 21);
  expect_rate(row_popcount(batch.detectors, 0), 64000, 0.2);
}

// A depolarizing channel flips a Z readout with probability 2p/3, and each
// side of a two-qubit channel with 8p/15.
TEST(FrameSimulator, DepolarizingMarginals) {
  auto c = two_qubits();
  c.reset(Basis::Z, {0, 1});
  c.depolarize1(0.3, {0});
  c.depolarize2(0.3, {0, 1});
  c.measure(Basis::Z, 0.0, {0, 1});
  c.detector(0, {1});
  c.detector(0, {0, 1});
  auto batch = harness::sample(c, 64 * 2000, 22);
  const size_t shots = 64 * 2000;
  expect_rate(row_popcount(batch.detectors, 0), shots, 0.3 * 8 / 15);
  // Eight of the fifteen two-qubit Paulis flip the parity.
  double pair_odd = 0.3 * 8 / 15;
  double single = 0.2;
  expect_rate(row_popcount(batch.detectors, 1), shots,
              pair_odd * (1 - single) + single * (1 - pair_odd));
}

TEST(FrameSimulator, CnotPropagatesFlips) {
  auto c = two_qubits();
  c.reset(Basis::Z, {0, 1});
  c.gate(OpCode::kX, {0});
  c.cx({0, 1});
  c.measure(Basis::Z, 0.0, {0, 1});
  auto ref = reference_sample(c);
  EXPECT_EQ(ref, (std::vector<uint8_t>{1, 1}));
}

TEST(ReferenceSample, RandomOutcomesAreConsistent) {
  auto c = two_qubits();
  c.reset(Basis::X, {0});
  c.reset(Basis::Z, {1});
  c.cx({0, 1});
  c.measure(Basis::Z, 0.0, {0, 1});
  for (uint64_t seed = 0; seed < 8; ++seed) {
    auto ref = reference_sample(c, seed);
    EXPECT_EQ(ref[0], ref[1]);
  }
}

TEST(Sampler, SameSeedSameShots) {
  auto c = build_memory_circuit(3, 2, {5e-3, 0});
  auto a = harness::sample(c, 1500, 99);
  auto b = harness::sample(c, 1500, 99);
  for (size_t r = 0; r < a.detectors.rows(); ++r) {
    for (size_t w = 0; w < a.detectors.words(); ++w) {
      ASSERT_EQ(a.detectors.row(r)[w], b.detectors.row(r)[w]);
    }
  }
  // Bits past the requested shot count stay clear.
  for (size_t r = 0; r < a.detectors.rows(); ++r) {
    EXPECT_EQ(a.detectors.row(r)[a.detectors.words() - 1] >> (1500 % 64), 0u);
  }
}

}  // namespace
}  // namespace msd::surface
