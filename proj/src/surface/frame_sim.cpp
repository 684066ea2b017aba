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

#include "msd/surface/frame_sim.h"

#include <cmath>
#include <memory>

#include "msd/pauli/tableau.h"
#include "msd/simd/kernels.h"

namespace msd::surface {

namespace {

double uniform01(std::mt19937_64& rng) {
  // (0, 1]
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Calls f(position) for each position in [0, n) hit with probability p.
template <typename F>
void for_each_hit(double p, size_t n, std::mt19937_64& rng, F&& f) {
  if (p <= 0.0 || n == 0) return;
  if (p >= 1.0) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const double inv_log = 1.0 / std::log1p(-p);
  size_t pos = 0;
  while (true) {
    double skip = std::floor(std::log(uniform01(rng)) * inv_log);
    if (skip >= static_cast<double>(n - pos)) return;
    pos += static_cast<size_t>(skip);
    f(pos);
    if (++pos >= n) return;
  }
}

inline void flip_lane(uint64_t* plane, size_t lane) {
  plane[lane >> 6] ^= uint64_t{1} << (lane & 63);
}

void fill_random(uint64_t* dst, size_t words, std::mt19937_64& rng) {
  for (size_t w = 0; w < words; ++w) dst[w] = rng();
}

void xor_random(uint64_t* dst, size_t words, std::mt19937_64& rng) {
  for (size_t w = 0; w < words; ++w) dst[w] ^= rng();
}

}  // namespace

void PauliFrame::apply_gate(const Instruction& inst) {
  const auto& k = simd::active();
  switch (inst.op) {
    case OpCode::kH:
      for (uint32_t q : inst.targets) k.swap(x(q), z(q), words_);
      break;
    case OpCode::kS:
      for (uint32_t q : inst.targets) k.xor_into(z(q), x(q), words_);
      break;
    case OpCode::kCX:
      for (size_t i = 0; i < inst.targets.size(); i += 2) {
        uint32_t c = inst.targets[i], t = inst.targets[i + 1];
        k.cx(x(c), z(c), x(t), z(t), words_);
      }
      break;
    default:
      break;
  }
}

void FrameSimulator::run(size_t words, std::mt19937_64& rng, FrameOutput& out,
                         bool randomize) const {
  const Circuit& c = circuit_;
  const size_t lanes = 64 * words;
  PauliFrame frame(c.num_qubits(), words);
  out.measurements.resize(c.num_measurements(), words);
  out.detectors.resize(c.num_detectors(), words);
  out.observables.resize(c.num_observables(), words);
  out.checks.resize(c.num_checks(), words);
  out.frames.resize(c.num_frames(), words);
  const auto& k = simd::active();
  size_t next_meas = 0;
  size_t next_det = 0;

  for (const Instruction& inst : c.instructions()) {
    switch (inst.op) {
      case OpCode::kR:
        for (uint32_t q : inst.targets) {
          std::fill_n(frame.x(q), words, 0);
          if (randomize) {
            fill_random(frame.z(q), words, rng);
          } else {
            std::fill_n(frame.z(q), words, 0);
          }
        }
        break;
      case OpCode::kRX:
        for (uint32_t q : inst.targets) {
          std::fill_n(frame.z(q), words, 0);
          if (randomize) {
            fill_random(frame.x(q), words, rng);
          } else {
            std::fill_n(frame.x(q), words, 0);
          }
        }
        break;
      case OpCode::kH:
      case OpCode::kS:
      case OpCode::kCX:
        frame.apply_gate(inst);
        break;
      case OpCode::kX:
      case OpCode::kZ:
      case OpCode::kTick:
        break;
      case OpCode::kDepolarize1:
        for_each_hit(inst.p, inst.targets.size() * lanes, rng, [&](size_t pos) {
          uint32_t q = inst.targets[pos / lanes];
          size_t lane = pos % lanes;
          uint64_t r = rng() % 3;  // 0 X, 1 Y, 2 Z
          if (r != 2) flip_lane(frame.x(q), lane);
          if (r != 0) flip_lane(frame.z(q), lane);
        });
        break;
      case OpCode::kDepolarize2:
        for_each_hit(inst.p, inst.targets.size() / 2 * lanes, rng, [&](size_t pos) {
          size_t pair = pos / lanes;
          size_t lane = pos % lanes;
          uint32_t a = inst.targets[2 * pair], b = inst.targets[2 * pair + 1];
          uint64_t r = rng() % 15 + 1;
          if (r & 1) flip_lane(frame.x(a), lane);
          if (r & 2) flip_lane(frame.z(a), lane);
          if (r & 4) flip_lane(frame.x(b), lane);
          if (r & 8) flip_lane(frame.z(b), lane);
        });
        break;
      case OpCode::kInjectZ:
        for_each_hit(inst.p, lanes, rng, [&](size_t lane) {
          for (uint32_t q : inst.targets) flip_lane(frame.z(q), lane);
        });
        break;
      case OpCode::kM:
      case OpCode::kMX: {
        const bool zbasis = inst.op == OpCode::kM;
        const size_t first = next_meas;
        for (uint32_t q : inst.targets) {
          uint64_t* rec = out.measurements.row(next_meas++);
          std::copy_n(zbasis ? frame.x(q) : frame.z(q), words, rec);
        }
        for_each_hit(inst.p, inst.targets.size() * lanes, rng, [&](size_t pos) {
          flip_lane(out.measurements.row(first + pos / lanes), pos % lanes);
        });
        if (randomize) {
          for (uint32_t q : inst.targets) xor_random(zbasis ? frame.z(q) : frame.x(q), words, rng);
        }
        break;
      }
      case OpCode::kDetector: {
        uint64_t* dst = out.detectors.row(next_det++);
        for (uint32_t m : inst.targets) k.xor_into(dst, out.measurements.row(m), words);
        break;
      }
      case OpCode::kObservable:
        for (uint32_t m : inst.targets) {
          k.xor_into(out.observables.row(inst.arg), out.measurements.row(m), words);
        }
        break;
      case OpCode::kCheck:
        for (uint32_t m : inst.targets) {
          k.xor_into(out.checks.row(inst.arg), out.measurements.row(m), words);
        }
        break;
      case OpCode::kFrame:
        for (uint32_t m : inst.targets) {
          k.xor_into(out.frames.row(inst.arg), out.measurements.row(m), words);
        }
        break;
    }
  }
}

std::vector<uint8_t> reference_sample(const Circuit& circuit, uint64_t seed) {
  pauli::StabilizerTableau t(circuit.num_qubits());
  auto gen = std::make_shared<std::mt19937_64>(seed);
  pauli::RandomBitSource coin = [gen]() { return ((*gen)() >> 63) != 0; };
  std::vector<uint8_t> out;
  out.reserve(circuit.num_measurements());
  for (const Instruction& inst : circuit.instructions()) {
    switch (inst.op) {
      case OpCode::kR:
      case OpCode::kRX:
        for (uint32_t q : inst.targets) {
          t.reset(q, inst.op == OpCode::kR ? pauli::Basis::Z : pauli::Basis::X, coin);
        }
        break;
      case OpCode::kH:
        for (uint32_t q : inst.targets) t.apply(pauli::CliffordGate::h(q));
        break;
      case OpCode::kS:
        for (uint32_t q : inst.targets) t.apply(pauli::CliffordGate::s(q));
        break;
      case OpCode::kX:
        for (uint32_t q : inst.targets) t.apply(pauli::CliffordGate::x(q));
        break;
      case OpCode::kZ:
        for (uint32_t q : inst.targets) t.apply(pauli::CliffordGate::z(q));
        break;
      case OpCode::kCX:
        for (size_t i = 0; i < inst.targets.size(); i += 2) {
          t.apply(pauli::CliffordGate::cnot(inst.targets[i], inst.targets[i + 1]));
        }
        break;
      case OpCode::kM:
      case OpCode::kMX:
        for (uint32_t q : inst.targets) {
          auto basis = inst.op == OpCode::kM ? pauli::Basis::Z : pauli::Basis::X;
          out.push_back(t.measure(q, basis, coin).outcome ? 1 : 0);
        }
        break;
      default:
        break;
    }
  }
  return out;
}

std::vector<uint8_t> reference_frame_parities(const Circuit& circuit,
                                              const std::vector<uint8_t>& reference) {
  std::vector<uint8_t> out(circuit.num_frames());
  for (const Instruction& inst : circuit.instructions()) {
    if (inst.op != OpCode::kFrame) continue;
    for (uint32_t m : inst.targets) out[inst.arg] ^= reference.at(m);
  }
  return out;
}

}  // namespace msd::surface
