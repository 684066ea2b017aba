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

#include "msd/surface/error_model.h"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>

#include "msd/simd/kernels.h"
#include "msd/surface/frame_sim.h"

namespace msd::surface {

double combine_probabilities(double q1, double q2) { return q1 * (1 - q2) + q2 * (1 - q1); }

namespace {

constexpr size_t kWords = 16;
constexpr size_t kLanes = 64 * kWords;

std::vector<ErrorMechanism> list_components(const Circuit& c, size_t& num_channels) {
  std::vector<ErrorMechanism> out;
  uint32_t channel = 0;
  uint32_t meas = 0;
  const auto& insts = c.instructions();
  auto add = [&](uint32_t inst, FaultKind kind, uint32_t loc, double p) {
    ErrorMechanism m;
    m.id = static_cast<uint32_t>(out.size());
    m.instruction = inst;
    m.kind = kind;
    m.location = loc;
    m.channel = channel;
    m.probability = p;
    out.push_back(std::move(m));
  };
  for (uint32_t i = 0; i < insts.size(); ++i) {
    const Instruction& inst = insts[i];
    switch (inst.op) {
      case OpCode::kDepolarize1:
        for (uint32_t q : inst.targets) {
          add(i, FaultKind::kX, q, 2 * inst.p / 3);
          add(i, FaultKind::kZ, q, 2 * inst.p / 3);
          ++channel;
        }
        break;
      case OpCode::kDepolarize2:
        for (size_t t = 0; t < inst.targets.size(); t += 2) {
          for (size_t s = 0; s < 2; ++s) {
            add(i, FaultKind::kX, inst.targets[t + s], 8 * inst.p / 15);
            add(i, FaultKind::kZ, inst.targets[t + s], 8 * inst.p / 15);
          }
          ++channel;
        }
        break;
      case OpCode::kInjectZ:
        add(i, FaultKind::kInjection, inst.targets.front(), inst.p);
        ++channel;
        break;
      case OpCode::kM:
      case OpCode::kMX:
        for (size_t t = 0; t < inst.targets.size(); ++t) {
          if (inst.p > 0) {
            add(i, FaultKind::kMeasurementFlip, meas + static_cast<uint32_t>(t), inst.p);
            ++channel;
          }
        }
        meas += static_cast<uint32_t>(inst.targets.size());
        break;
      default:
        break;
    }
  }
  num_channels = channel;
  return out;
}

template <typename F>
void for_each_lane(const uint64_t* plane, size_t words, F&& f) {
  for (size_t w = 0; w < words; ++w) {
    uint64_t bits = plane[w];
    while (bits) {
      f(w * 64 + static_cast<size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

}  // namespace

DetectorErrorModel enumerate_error_mechanisms(const Circuit& circuit) {
  if (circuit.num_observables() > 64 || circuit.num_checks() > 64 || circuit.num_frames() > 64) {
    throw std::invalid_argument("at most 64 observables, checks and frames are supported");
  }
  DetectorErrorModel dem;
  dem.num_detectors = circuit.num_detectors();
  dem.components = list_components(circuit, dem.num_channels);
  auto& comps = dem.components;
  const auto& insts = circuit.instructions();
  const auto& k = simd::active();

  // Measurement index offset of every instruction.
  std::vector<uint32_t> meas_before(insts.size() + 1, 0);
  std::vector<uint32_t> det_before(insts.size() + 1, 0);
  for (size_t i = 0; i < insts.size(); ++i) {
    bool is_m = insts[i].op == OpCode::kM || insts[i].op == OpCode::kMX;
    meas_before[i + 1] = meas_before[i] + (is_m ? static_cast<uint32_t>(insts[i].targets.size()) : 0);
    det_before[i + 1] = det_before[i] + (insts[i].op == OpCode::kDetector ? 1 : 0);
  }

  PauliFrame frame(circuit.num_qubits(), kWords);
  BitTable record(circuit.num_measurements(), kWords);
  std::vector<uint64_t> plane(kWords);

  for (size_t start = 0; start < comps.size(); start += kLanes) {
    const size_t end = std::min(comps.size(), start + kLanes);
    frame.clear();
    record.clear();
    size_t next = start;
    for (size_t i = comps[start].instruction; i < insts.size(); ++i) {
      const Instruction& inst = insts[i];
      switch (inst.op) {
        case OpCode::kR:
          for (uint32_t q : inst.targets) {
            std::fill_n(frame.x(q), kWords, 0);
            std::fill_n(frame.z(q), kWords, 0);
          }
          break;
        case OpCode::kRX:
          for (uint32_t q : inst.targets) {
            std::fill_n(frame.x(q), kWords, 0);
            std::fill_n(frame.z(q), kWords, 0);
          }
          break;
        case OpCode::kH:
        case OpCode::kS:
        case OpCode::kCX:
          frame.apply_gate(inst);
          break;
        case OpCode::kDepolarize1:
        case OpCode::kDepolarize2:
          for (; next < end && comps[next].instruction == i; ++next) {
            size_t lane = next - start;
            uint64_t* plane_q = comps[next].kind == FaultKind::kX ? frame.x(comps[next].location)
                                                                  : frame.z(comps[next].location);
            plane_q[lane >> 6] ^= uint64_t{1} << (lane & 63);
          }
          break;
        case OpCode::kInjectZ:
          for (; next < end && comps[next].instruction == i; ++next) {
            size_t lane = next - start;
            for (uint32_t q : inst.targets) frame.z(q)[lane >> 6] ^= uint64_t{1} << (lane & 63);
          }
          break;
        case OpCode::kM:
        case OpCode::kMX: {
          uint32_t m = meas_before[i];
          for (uint32_t q : inst.targets) {
            std::copy_n(inst.op == OpCode::kM ? frame.x(q) : frame.z(q), kWords, record.row(m++));
          }
          for (; next < end && comps[next].instruction == i; ++next) {
            record.flip(comps[next].location, next - start);
          }
          break;
        }
        case OpCode::kDetector: {
          std::fill(plane.begin(), plane.end(), 0);
          for (uint32_t m : inst.targets) k.xor_into(plane.data(), record.row(m), kWords);
          uint32_t det = det_before[i];
          for_each_lane(plane.data(), kWords, [&](size_t lane) {
            if (start + lane < end) comps[start + lane].detectors.push_back(det);
          });
          break;
        }
        case OpCode::kObservable:
        case OpCode::kCheck:
        case OpCode::kFrame: {
          std::fill(plane.begin(), plane.end(), 0);
          for (uint32_t m : inst.targets) k.xor_into(plane.data(), record.row(m), kWords);
          uint64_t bit = uint64_t{1} << inst.arg;
          for_each_lane(plane.data(), kWords, [&](size_t lane) {
            if (start + lane >= end) return;
            auto& c = comps[start + lane];
            if (inst.op == OpCode::kObservable) {
              c.observables ^= bit;
            } else if (inst.op == OpCode::kCheck) {
              c.checks ^= bit;
            } else {
              c.frames ^= bit;
            }
          });
          break;
        }
        default:
          break;
      }
    }
  }

  using Key = std::tuple<std::vector<uint32_t>, uint64_t, uint64_t, uint64_t>;
  std::map<Key, size_t> index;
  for (const auto& c : comps) {
    if (c.detectors.empty()) continue;
    Key key{c.detectors, c.observables, c.checks, c.frames};
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), dem.mechanisms.size());
      ErrorMechanism m = c;
      m.id = static_cast<uint32_t>(dem.mechanisms.size());
      dem.mechanisms.push_back(std::move(m));
    } else {
      auto& m = dem.mechanisms[it->second];
      m.probability = combine_probabilities(m.probability, c.probability);
    }
  }
  return dem;
}

std::vector<double> exact_detector_probabilities(const DetectorErrorModel& dem) {
  std::vector<double> keep(dem.num_detectors, 1.0);
  std::vector<uint32_t> touched;
  size_t i = 0;
  const auto& comps = dem.components;
  while (i < comps.size()) {
    size_t j = i;
    touched.clear();
    while (j < comps.size() && comps[j].channel == comps[i].channel) {
      touched.insert(touched.end(), comps[j].detectors.begin(), comps[j].detectors.end());
      ++j;
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    // Every component of a channel carries the same marginal, and any
    // detector touched by the channel flips with exactly that marginal.
    const double r = comps[i].probability;
    for (uint32_t d : touched) keep[d] *= 1.0 - 2.0 * r;
    i = j;
  }
  std::vector<double> out(dem.num_detectors);
  for (size_t d = 0; d < out.size(); ++d) out[d] = 0.5 * (1.0 - keep[d]);
  return out;
}

}  // namespace msd::surface
