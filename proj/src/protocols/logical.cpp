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

#include "msd/protocols/logical.h"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>

namespace msd::protocols {

using pauli::Basis;
using pauli::CliffordGate;
using pauli::StabilizerTableau;

namespace {

uint8_t parity_of(const std::vector<uint8_t>& bits, const std::vector<size_t>& labels) {
  uint8_t p = 0;
  for (size_t j : labels) p ^= bits[j - 1];
  return p;
}

pauli::RandomBitSource fixed_coin(uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng]() { return ((*rng)() >> 63) != 0; };
}

}  // namespace

StabilizerTableau encode_network_state(const ProtocolSpec& spec) {
  StabilizerTableau t(spec.num_data);
  for (size_t q = 0; q < spec.num_data; ++q) {
    if (spec.init_basis[q] == Basis::X) t.apply(CliffordGate::h(q));
  }
  for (const auto& c : spec.flat_cnots()) t.apply(CliffordGate::cnot(c.control, c.target));
  return t;
}

LogicalRunner::LogicalRunner(ProtocolSpec spec) : spec_(std::move(spec)) {
  RawShot raw = run_raw(0, fixed_coin(0x5eed));
  reference_.checks = raw.check_parities;
  reference_.output = raw.output_parity;
}

LogicalRunner::RawShot LogicalRunner::run_raw(ErrorPattern pattern,
                                              const pauli::RandomBitSource& rng) const {
  const size_t k = spec_.num_resources();
  if (k < 32 && (pattern >> k) != 0) throw std::invalid_argument("error pattern too wide");
  const size_t first_resource = spec_.num_data;
  StabilizerTableau t(spec_.num_data + k);
  for (size_t q = 0; q < spec_.num_data; ++q) {
    if (spec_.init_basis[q] == Basis::X) t.apply(CliffordGate::h(q));
  }
  for (const auto& c : spec_.flat_cnots()) t.apply(CliffordGate::cnot(c.control, c.target));

  // Resources start in |->; an input error leaves them in |+>.
  for (size_t r = 0; r < k; ++r) {
    size_t a = first_resource + r;
    t.apply(CliffordGate::h(a));
    if (!((pattern >> r) & 1)) t.apply(CliffordGate::z(a));
  }
  for (const auto& [data, resource] : spec_.consumption) {
    t.apply(CliffordGate::cnot(data, first_resource + resource));
  }

  RawShot raw;
  raw.n_bits.resize(k);
  raw.m_bits.resize(k);
  for (size_t r = 0; r < k; ++r) {
    raw.n_bits[r] = t.measure(first_resource + r, Basis::X, rng).outcome;
  }
  for (size_t j = 1; j <= k; ++j) raw.m_bits[j - 1] = t.measure(j, Basis::X, rng).outcome;
  raw.output_x = t.measure(0, Basis::X, rng).outcome;

  for (const auto& check : spec_.checks) raw.check_parities.push_back(parity_of(raw.m_bits, check));
  raw.output_parity = raw.output_x ^ parity_of(raw.m_bits, spec_.output_support);
  return raw;
}

ShotRecord LogicalRunner::run(ErrorPattern pattern, const pauli::RandomBitSource& rng) const {
  RawShot raw = run_raw(pattern, rng);
  ShotRecord rec;
  rec.accepted = true;
  for (size_t c = 0; c < raw.check_parities.size(); ++c) {
    if (raw.check_parities[c] != reference_.checks[c]) rec.accepted = false;
  }
  rec.output_error = raw.output_parity != reference_.output;
  uint8_t frame = parity_of(raw.m_bits, spec_.frame_rule.m_indices);
  for (size_t j : spec_.frame_rule.n_indices) frame ^= raw.n_bits[j - 1];
  rec.frame_offset = spec_.frame_rule.offset_when_even ? frame == 0 : frame == 1;
  rec.n_bits = std::move(raw.n_bits);
  rec.m_bits = std::move(raw.m_bits);
  return rec;
}

ShotRecord run_logical_shot(const ProtocolSpec& spec, ErrorPattern pattern,
                            const pauli::RandomBitSource& rng) {
  return LogicalRunner(spec).run(pattern, rng);
}

size_t OracleTable::accepted_count() const {
  size_t n = 0;
  for (uint64_t c : accepted_by_weight) n += c;
  return n;
}

namespace {
double weight_polynomial(const std::vector<uint64_t>& counts, size_t k, double p) {
  double total = 0.0;
  for (size_t w = 0; w <= k; ++w) {
    if (counts[w] == 0) continue;
    total += static_cast<double>(counts[w]) * std::pow(p, static_cast<double>(w)) *
             std::pow(1.0 - p, static_cast<double>(k - w));
  }
  return total;
}
}  // namespace

double OracleTable::p_accept(double p) const {
  return weight_polynomial(accepted_by_weight, num_resources, p);
}

double OracleTable::p_accept_and_error(double p) const {
  return weight_polynomial(error_by_weight, num_resources, p);
}

double OracleTable::p_out(double p) const { return p_accept_and_error(p) / p_accept(p); }

double OracleTable::discard_ratio(double p) const { return 1.0 - p_accept(p); }

OracleTable exhaustive_oracle(const ProtocolSpec& spec) {
  const size_t k = spec.num_resources();
  if (k > 20) throw std::invalid_argument("too many resources to enumerate");
  LogicalRunner runner(spec);
  auto coin = fixed_coin(0x0a11);
  OracleTable table;
  table.kind = spec.kind;
  table.num_resources = k;
  table.accepted_by_weight.assign(k + 1, 0);
  table.error_by_weight.assign(k + 1, 0);
  const ErrorPattern end = ErrorPattern{1} << k;
  table.entries.reserve(end);
  for (ErrorPattern pattern = 0; pattern < end; ++pattern) {
    ShotRecord rec = runner.run(pattern, coin);
    table.entries.push_back({pattern, rec.accepted, rec.output_error});
    size_t w = std::popcount(pattern);
    if (rec.accepted) {
      table.accepted_by_weight[w]++;
      if (rec.output_error) table.error_by_weight[w]++;
    }
  }
  return table;
}

double discard_ratio(const ProtocolSpec& spec, double p) {
  static std::mutex mu;
  static std::map<ProtocolKind, OracleTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(spec.kind);
  if (it == cache.end()) it = cache.emplace(spec.kind, exhaustive_oracle(spec)).first;
  return it->second.discard_ratio(p);
}

void write_oracle_csv(const OracleTable& table, std::ostream& out) {
  out << "pattern,accepted,output_error\n";
  for (const auto& e : table.entries) {
    out << e.pattern << ',' << (e.accepted ? 1 : 0) << ',' << (e.output_error ? 1 : 0) << '\n';
  }
}

}  // namespace msd::protocols
