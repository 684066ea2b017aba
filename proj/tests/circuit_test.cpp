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

#include <string>

#include "msd/protocols/protocol.h"
#include "msd/surface/builders.h"
#include "msd/surface/circuit.h"

namespace msd::surface {
namespace {

using pauli::Basis;
using protocols::build_protocol;
using protocols::ProtocolKind;

size_t cx_pairs(const Circuit& c) {
  size_t n = 0;
  for (const auto& inst : c.instructions()) {
    if (inst.op == OpCode::kCX) n += inst.targets.size() / 2;
  }
  return n;
}

TEST(Circuit, TextRoundTrip) {
  auto c = build_distillation_circuit(build_protocol(ProtocolKind::SevenToOne), 3, {1e-3, 0.05});
  auto text = c.to_text();
  auto back = Circuit::from_text(text);
  EXPECT_EQ(back.to_text(), text);
  EXPECT_EQ(back.num_detectors(), c.num_detectors());
  EXPECT_EQ(back.detector_home(), c.detector_home());
  EXPECT_EQ(back.num_checks(), c.num_checks());
  EXPECT_EQ(back.num_frames(), c.num_frames());
}

TEST(Circuit, ParseSmallProgram) {
  auto c = Circuit::from_text(
      "QUBIT(0) 0 1 1\n"
      "QUBIT(0) 1 3 1\n"
      "R 0 1\n"
      "DEPOLARIZE1(0.125) 0\n"
      "CX 0 1\n"
      "M(0.25) 0 1\n"
      "DETECTOR(0) 0 1\n"
      "OBSERVABLE(2) 1\n");
  EXPECT_EQ(c.num_qubits(), 2u);
  EXPECT_EQ(c.num_measurements(), 2u);
  EXPECT_EQ(c.num_detectors(), 1u);
  EXPECT_EQ(c.num_observables(), 3u);
  EXPECT_DOUBLE_EQ(c.instructions()[1].p, 0.125);
  EXPECT_DOUBLE_EQ(c.instructions()[3].p, 0.25);
}

TEST(Circuit, ParseErrors) {
  EXPECT_THROW(Circuit::from_text("QUBIT(0) 0 1 1\nFOO 0\n"), std::invalid_argument);
  EXPECT_THROW(Circuit::from_text("QUBIT(0) 0 1 1\nM(0.1 0\n"), std::invalid_argument);
  EXPECT_THROW(Circuit::from_text("QUBIT(0) 0 1 1\nM(abc) 0\n"), std::invalid_argument);
  EXPECT_THROW(Circuit::from_text("QUBIT(0) 0 1 1\nR 3\n"), std::out_of_range);
  EXPECT_THROW(Circuit::from_text("QUBIT(0) 0 1 1\nDETECTOR(0) 0\n"), std::out_of_range);
}

TEST(Circuit, AppendValidation) {
  Circuit c;
  c.add_qubit({0, 1, 1});
  c.add_qubit({0, 3, 1});
  EXPECT_THROW(c.cx({0, 0}), std::invalid_argument);
  EXPECT_THROW(c.cx({0}), std::invalid_argument);
  EXPECT_THROW(c.depolarize1(1.5, {0}), std::invalid_argument);
  EXPECT_THROW(c.gate(OpCode::kCX, {0}), std::invalid_argument);
  c.measure(Basis::Z, 0.0, {0});
  EXPECT_THROW(c.detector(1, {0}), std::out_of_range);
  EXPECT_NO_THROW(c.detector(0, {0}));
  c.depolarize1(0.0, {0});
  EXPECT_EQ(c.count_ops(OpCode::kDepolarize1), 0u);
}

TEST(Circuit, BuildIsDeterministic) {
  auto spec = build_protocol(ProtocolKind::FifteenToOne);
  EXPECT_EQ(build_distillation_circuit(spec, 3, {1e-3, 0.1}),
            build_distillation_circuit(spec, 3, {1e-3, 0.1}));
}

TEST(SeRound, GateCounts) {
  for (size_t d : {3, 5}) {
    auto c = build_se_round(build_patch(d), {1e-3, 0});
    // Bulk plaquettes have four data qubits, boundary ones two.
    size_t bulk = (d - 1) * (d - 1);
    size_t boundary = 2 * (d - 1);
    EXPECT_EQ(cx_pairs(c), 4 * bulk + 2 * boundary);
    EXPECT_EQ(c.count_ops(OpCode::kCX), 4u);
    EXPECT_EQ(c.count_ops(OpCode::kM) + c.count_ops(OpCode::kMX), 2u);
    EXPECT_EQ(c.num_measurements(), d * d - 1);
    EXPECT_EQ(c.num_detectors(), 0u);
  }
}

TEST(TransversalCnot, PairsMatchDataQubits) {
  auto a = build_patch(3);
  auto pairs = build_transversal_cnot(a, a);
  ASSERT_EQ(pairs.size(), 9u);
  EXPECT_EQ(pairs[4], std::make_pair(4u, static_cast<uint32_t>(a.num_qubits() + 4)));
  EXPECT_THROW(build_transversal_cnot(a, build_patch(5)), std::invalid_argument);
}

// Z memory: a half round of detectors at each end and full rounds between.
// After a transversal CNOT the control X plaquettes and the target Z
// plaquettes compare against both patches' previous values.
TEST(PatchCircuitBuilder, PlaquetteFlowThroughCnot) {
  PatchCircuitBuilder b(3, 2, 0.0);
  b.init_patches({0}, Basis::X);
  b.init_patches({1}, Basis::Z);
  b.se_round({0, 1});
  const size_t mark = b.circuit().num_detectors();
  EXPECT_EQ(mark, 8u);
  b.transversal_cnot(0, 1);
  b.se_round({0, 1});
  std::vector<size_t> terms;
  for (const auto& inst : b.circuit().instructions()) {
    if (inst.op == OpCode::kDetector) terms.push_back(inst.targets.size());
  }
  ASSERT_EQ(terms.size(), mark + 16);
  const auto& home = b.circuit().detector_home();
  size_t control_three = 0, target_three = 0;
  for (size_t i = mark; i < terms.size(); ++i) {
    EXPECT_TRUE(terms[i] == 2 || terms[i] == 3);
    if (terms[i] == 3) (home[i] == 0 ? control_three : target_three)++;
  }
  EXPECT_EQ(control_three, b.layout().x_plaquettes.size());
  EXPECT_EQ(target_three, b.layout().z_plaquettes.size());
}

TEST(MemoryCircuit, DetectorCount) {
  for (size_t d : {3, 5}) {
    for (size_t rounds = 1; rounds <= 4; ++rounds) {
      auto c = build_memory_circuit(d, rounds, {1e-3, 0});
      size_t half = (d * d - 1) / 2;
      EXPECT_EQ(c.num_detectors(), half + 2 * half * (rounds - 1) + half) << d << " " << rounds;
      EXPECT_EQ(c.num_observables(), 1u);
      EXPECT_EQ(c.num_measurements(), rounds * (d * d - 1) + d * d);
    }
  }
  EXPECT_THROW(build_memory_circuit(3, 0, {}), std::invalid_argument);
}

TEST(SubcircuitExperiment, Shape) {
  auto seven = build_protocol(ProtocolKind::SevenToOne);
  auto fifteen = build_protocol(ProtocolKind::FifteenToOne);
  EXPECT_EQ(subcircuit_rounds(seven), 4u);
  EXPECT_EQ(subcircuit_rounds(fifteen), 5u);
  auto c7 = build_cnot_subcircuit_experiment(seven, 3, {1e-3, 0});
  auto c15 = build_cnot_subcircuit_experiment(fifteen, 3, {1e-3, 0});
  EXPECT_EQ(c7.num_observables(), 8u);
  EXPECT_EQ(c15.num_observables(), 16u);
  EXPECT_EQ(c7.num_patches(), 8u);
  EXPECT_EQ(c15.num_patches(), 16u);
  // Forward and reversed network.
  EXPECT_EQ(cx_pairs(c7), 2 * 10 * 9 + 4 * 24 * 8);
}

TEST(DistillationCircuit, Shape) {
  auto seven = build_protocol(ProtocolKind::SevenToOne);
  auto c = build_distillation_circuit(seven, 3, {1e-3, 0.1});
  EXPECT_EQ(c.num_patches(), 15u);
  EXPECT_EQ(c.num_checks(), 3u);
  EXPECT_EQ(c.num_observables(), 1u);
  EXPECT_EQ(c.num_frames(), 1u);
  EXPECT_EQ(c.count_ops(OpCode::kInjectZ), 7u);
  auto f = build_distillation_circuit(build_protocol(ProtocolKind::FifteenToOne), 3, {0, 0.1});
  EXPECT_EQ(f.num_patches(), 31u);
  EXPECT_EQ(f.num_checks(), 4u);
  EXPECT_THROW(build_distillation_circuit(seven, 3, {0, 1.5}), std::invalid_argument);
  EXPECT_THROW(build_distillation_circuit(seven, 3, {0, 0.1}, 1u << 7), std::invalid_argument);
}

TEST(DistillationCircuit, ForcedPatternFixesInjections) {
  auto c = build_distillation_circuit(build_protocol(ProtocolKind::SevenToOne), 3, {0, 0.3}, 0b101);
  std::vector<uint32_t> patches;
  for (const auto& inst : c.instructions()) {
    if (inst.op != OpCode::kInjectZ) continue;
    EXPECT_EQ(inst.p, 1.0);
    patches.push_back(c.qubits()[inst.targets.front()].patch);
  }
  // Resources follow the eight data patches.
  EXPECT_EQ(patches, (std::vector<uint32_t>{8, 10}));
}

}  // namespace
}  // namespace msd::surface
