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

#include "msd/protocols/protocol.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace msd::protocols {

using pauli::Basis;

std::string_view protocol_name(ProtocolKind kind) {
  return kind == ProtocolKind::SevenToOne ? "7to1" : "15to1";
}

ProtocolKind parse_protocol(std::string_view text) {
  if (text == "7to1" || text == "7-to-1" || text == "7") return ProtocolKind::SevenToOne;
  if (text == "15to1" || text == "15-to-1" || text == "15") return ProtocolKind::FifteenToOne;
  throw std::invalid_argument("unknown protocol '" + std::string(text) + "'");
}

size_t ProtocolSpec::num_cnots() const { return flat_cnots().size(); }

std::vector<CnotPair> ProtocolSpec::flat_cnots() const {
  std::vector<CnotPair> out;
  for (const auto& step : cnot_steps) {
    for (const auto& layer : step) out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace {

std::vector<Basis> init_from_plus_set(size_t n, std::initializer_list<size_t> plus) {
  std::vector<Basis> out(n, Basis::Z);
  for (size_t q : plus) out[q] = Basis::X;
  return out;
}

std::vector<size_t> range_inclusive(size_t lo, size_t hi) {
  std::vector<size_t> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// Qubit j sits in check b exactly when bit b of j is set.
std::vector<std::vector<size_t>> binary_checks(size_t k, size_t num_checks) {
  std::vector<std::vector<size_t>> checks(num_checks);
  for (size_t b = 0; b < num_checks; ++b) {
    for (size_t j = 1; j <= k; ++j) {
      if ((j >> b) & 1) checks[b].push_back(j);
    }
  }
  return checks;
}

}  // namespace

ProtocolSpec build_protocol(ProtocolKind kind) {
  ProtocolSpec spec;
  spec.kind = kind;
  if (kind == ProtocolKind::SevenToOne) {
    spec.num_data = 8;
    spec.init_basis = init_from_plus_set(8, {0, 1, 2, 4});
    spec.cnot_steps = {
        {{{1, 5}, {2, 6}}},
        {{{0, 2}, {4, 6}}, {{1, 3}, {5, 7}}},
        {{{0, 1}, {2, 3}, {4, 5}, {6, 7}}},
    };
    spec.checks = binary_checks(7, 3);
    spec.output_support = range_inclusive(1, 7);
    spec.frame_rule = {range_inclusive(1, 7), range_inclusive(1, 7), true};
  } else {
    spec.num_data = 16;
    spec.init_basis = init_from_plus_set(16, {0, 1, 2, 4, 8});
    spec.cnot_steps = {
        {{{1, 9}, {2, 10}, {4, 12}}},
        {{{0, 4}, {1, 5}, {2, 6}, {8, 12}, {9, 13}, {10, 14}}},
        {{{0, 2}, {4, 6}, {8, 10}, {12, 14}}, {{1, 3}, {5, 7}, {9, 11}, {13, 15}}},
        {{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}, {12, 13}, {14, 15}}},
    };
    spec.checks = binary_checks(15, 4);
    // A weight-7 face of the tetrahedron: the qubits outside the last check.
    spec.output_support = range_inclusive(1, 7);
    spec.frame_rule = {{}, range_inclusive(1, 7), false};
  }
  for (size_t j = 1; j < spec.num_data; ++j) spec.consumption.emplace_back(j, j - 1);
  return spec;
}

}  // namespace msd::protocols
