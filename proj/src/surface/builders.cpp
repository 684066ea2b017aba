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

#include "msd/surface/builders.h"

#include <algorithm>
#include <stdexcept>

namespace msd::surface {

using pauli::Basis;

PatchCircuitBuilder::PatchCircuitBuilder(size_t d, size_t num_patches, double p_circuit)
    : d_(d), p_(p_circuit), layout_(build_patch(d)) {
  if (!(p_circuit >= 0.0 && p_circuit <= 1.0)) {
    throw std::invalid_argument("p_circuit out of [0, 1]");
  }
  for (size_t patch = 0; patch < num_patches; ++patch) {
    for (const auto& c : layout_.data_coords) {
      circuit_.add_qubit({static_cast<uint32_t>(patch), c.x, c.y});
    }
    for (const auto& pl : layout_.plaquettes) {
      circuit_.add_qubit({static_cast<uint32_t>(patch), pl.ancilla.x, pl.ancilla.y});
    }
  }
  plaquette_expr_.assign(num_patches, std::vector<Expr>(layout_.num_ancillas()));
  live_.assign(num_patches, false);
}

uint32_t PatchCircuitBuilder::data_qubit(size_t patch, size_t i) const {
  return static_cast<uint32_t>(patch * layout_.num_qubits() + i);
}

uint32_t PatchCircuitBuilder::ancilla_qubit(size_t patch, size_t plaquette) const {
  return static_cast<uint32_t>(patch * layout_.num_qubits() + layout_.num_data() + plaquette);
}

void PatchCircuitBuilder::xor_expr(Expr& into, const Expr& other) {
  if (!into || !other) {
    into.reset();
    return;
  }
  std::vector<uint32_t> out;
  std::set_symmetric_difference(into->begin(), into->end(), other->begin(), other->end(),
                                std::back_inserter(out));
  *into = std::move(out);
}

void PatchCircuitBuilder::init_patches(const std::vector<size_t>& patches, Basis basis,
                                       bool noisy) {
  std::vector<uint32_t> qs;
  for (size_t patch : patches) {
    for (size_t i = 0; i < layout_.num_data(); ++i) qs.push_back(data_qubit(patch, i));
    for (size_t k = 0; k < layout_.num_ancillas(); ++k) {
      bool matches = (layout_.plaquettes[k].type == PlaquetteType::X) == (basis == Basis::X);
      plaquette_expr_[patch][k] = matches ? Expr(std::vector<uint32_t>{}) : Expr();
    }
    live_[patch] = true;
  }
  circuit_.reset(basis, qs);
  if (noisy) circuit_.depolarize1(p_, qs);
}

void PatchCircuitBuilder::logical_z(size_t patch) {
  std::vector<uint32_t> qs;
  for (size_t i : layout_.logical_z_support) qs.push_back(data_qubit(patch, i));
  circuit_.gate(OpCode::kZ, qs);
}

void PatchCircuitBuilder::inject_logical_z(size_t patch, double p) {
  std::vector<uint32_t> qs;
  for (size_t i : layout_.logical_z_support) qs.push_back(data_qubit(patch, i));
  circuit_.inject_z(p, qs);
}

void PatchCircuitBuilder::se_round(const std::vector<size_t>& patches) {
  std::vector<uint32_t> x_anc, z_anc, all;
  for (size_t patch : patches) {
    for (size_t k = 0; k < layout_.num_ancillas(); ++k) {
      (layout_.plaquettes[k].type == PlaquetteType::X ? x_anc : z_anc)
          .push_back(ancilla_qubit(patch, k));
    }
    for (size_t q = 0; q < layout_.num_qubits(); ++q) {
      all.push_back(static_cast<uint32_t>(patch * layout_.num_qubits() + q));
    }
  }
  circuit_.reset(Basis::Z, z_anc);
  circuit_.reset(Basis::X, x_anc);
  circuit_.depolarize1(p_, all);
  circuit_.tick();

  std::vector<uint8_t> touched(circuit_.num_qubits());
  for (size_t layer = 0; layer < 4; ++layer) {
    std::vector<uint32_t> pairs;
    for (size_t patch : patches) {
      for (size_t k = 0; k < layout_.num_ancillas(); ++k) {
        const Plaquette& pl = layout_.plaquettes[k];
        int q = pl.schedule[layer];
        if (q < 0) continue;
        uint32_t a = ancilla_qubit(patch, k);
        uint32_t dq = data_qubit(patch, static_cast<size_t>(q));
        if (pl.type == PlaquetteType::X) {
          pairs.insert(pairs.end(), {a, dq});
        } else {
          pairs.insert(pairs.end(), {dq, a});
        }
      }
    }
    std::fill(touched.begin(), touched.end(), 0);
    for (uint32_t q : pairs) touched[q] = 1;
    std::vector<uint32_t> idle;
    for (uint32_t q : all) {
      if (!touched[q]) idle.push_back(q);
    }
    circuit_.cx(pairs);
    circuit_.depolarize2(p_, pairs);
    circuit_.depolarize1(p_, idle);
    circuit_.tick();
  }

  std::vector<uint32_t> data;
  for (size_t patch : patches) {
    for (size_t i = 0; i < layout_.num_data(); ++i) data.push_back(data_qubit(patch, i));
  }
  uint32_t z_first = circuit_.measure(Basis::Z, p_, z_anc);
  uint32_t x_first = circuit_.measure(Basis::X, p_, x_anc);
  circuit_.depolarize1(p_, data);
  circuit_.tick();

  uint32_t z_next = z_first;
  uint32_t x_next = x_first;
  std::vector<std::vector<uint32_t>> meas(patches.size(),
                                          std::vector<uint32_t>(layout_.num_ancillas()));
  for (size_t pi = 0; pi < patches.size(); ++pi) {
    for (size_t k = 0; k < layout_.num_ancillas(); ++k) {
      meas[pi][k] = layout_.plaquettes[k].type == PlaquetteType::X ? x_next++ : z_next++;
    }
  }
  for (size_t pi = 0; pi < patches.size(); ++pi) {
    size_t patch = patches[pi];
    for (size_t k = 0; k < layout_.num_ancillas(); ++k) {
      Expr& e = plaquette_expr_[patch][k];
      if (e) {
        std::vector<uint32_t> terms = *e;
        terms.push_back(meas[pi][k]);
        circuit_.detector(static_cast<uint32_t>(patch), std::move(terms));
      }
      e = std::vector<uint32_t>{meas[pi][k]};
    }
  }
}

void PatchCircuitBuilder::transversal_cnot(size_t control, size_t target) {
  if (control == target) throw std::invalid_argument("transversal CNOT needs two patches");
  if (!live_.at(control) || !live_.at(target)) {
    throw std::logic_error("transversal CNOT on a patch that is not initialised");
  }
  std::vector<uint32_t> pairs;
  for (size_t i = 0; i < layout_.num_data(); ++i) {
    pairs.push_back(data_qubit(control, i));
    pairs.push_back(data_qubit(target, i));
  }
  circuit_.cx(pairs);
  for (size_t k = 0; k < layout_.num_ancillas(); ++k) {
    if (layout_.plaquettes[k].type == PlaquetteType::X) {
      xor_expr(plaquette_expr_[control][k], plaquette_expr_[target][k]);
    } else {
      xor_expr(plaquette_expr_[target][k], plaquette_expr_[control][k]);
    }
  }
}

std::vector<uint32_t> PatchCircuitBuilder::measure_patch(size_t patch, Basis basis) {
  std::vector<uint32_t> qs;
  for (size_t i = 0; i < layout_.num_data(); ++i) qs.push_back(data_qubit(patch, i));
  uint32_t first = circuit_.measure(basis, p_, qs);
  std::vector<uint32_t> meas(qs.size());
  for (size_t i = 0; i < qs.size(); ++i) meas[i] = first + static_cast<uint32_t>(i);
  const PlaquetteType want = basis == Basis::X ? PlaquetteType::X : PlaquetteType::Z;
  for (size_t k = 0; k < layout_.num_ancillas(); ++k) {
    Expr& e = plaquette_expr_[patch][k];
    if (layout_.plaquettes[k].type == want && e) {
      std::vector<uint32_t> terms = *e;
      for (size_t q : layout_.plaquettes[k].support()) terms.push_back(meas[q]);
      circuit_.detector(static_cast<uint32_t>(patch), std::move(terms));
    }
    e.reset();
  }
  live_[patch] = false;
  return meas;
}

std::vector<uint32_t> PatchCircuitBuilder::logical_chain(const std::vector<uint32_t>& data_meas,
                                                         Basis basis) const {
  const auto& support =
      basis == Basis::X ? layout_.logical_x_support : layout_.logical_z_support;
  std::vector<uint32_t> out;
  for (size_t i : support) out.push_back(data_meas.at(i));
  return out;
}

Circuit build_se_round(const PatchLayout& patch, const NoiseModel& noise) {
  PatchCircuitBuilder b(patch.d, 1, noise.p_circuit);
  b.se_round({0});
  return b.take();
}

std::vector<std::pair<uint32_t, uint32_t>> build_transversal_cnot(const PatchLayout& control,
                                                                  const PatchLayout& target) {
  if (control.d != target.d) throw std::invalid_argument("patch distances differ");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  const uint32_t offset = static_cast<uint32_t>(control.num_qubits());
  for (uint32_t i = 0; i < control.num_data(); ++i) pairs.emplace_back(i, offset + i);
  return pairs;
}

Circuit build_memory_circuit(size_t d, size_t rounds, const NoiseModel& noise, Basis basis) {
  if (rounds < 1) throw std::invalid_argument("memory experiment needs at least one round");
  PatchCircuitBuilder b(d, 1, noise.p_circuit);
  b.init_patches({0}, basis);
  b.circuit().tick();
  for (size_t r = 0; r < rounds; ++r) b.se_round({0});
  auto meas = b.measure_patch(0, basis);
  b.circuit().observable(0, b.logical_chain(meas, basis));
  return b.take();
}

namespace {

void append_chain(std::vector<uint32_t>& into, const std::vector<uint32_t>& chain) {
  into.insert(into.end(), chain.begin(), chain.end());
}

void init_data_patches(PatchCircuitBuilder& b, const protocols::ProtocolSpec& spec,
                       std::vector<size_t>& data) {
  std::vector<size_t> plus, zero;
  for (size_t q = 0; q < spec.num_data; ++q) {
    data.push_back(q);
    (spec.init_basis[q] == Basis::X ? plus : zero).push_back(q);
  }
  b.init_patches(plus, Basis::X);
  b.init_patches(zero, Basis::Z);
  b.circuit().tick();
}

}  // namespace

Circuit build_distillation_circuit(const protocols::ProtocolSpec& spec, size_t d,
                                   const NoiseModel& noise, std::optional<uint32_t> forced_pattern) {
  if (!(noise.p_in >= 0.0 && noise.p_in <= 1.0)) throw std::invalid_argument("p_in out of [0, 1]");
  const size_t k = spec.num_resources();
  if (spec.consumption.size() != k || spec.init_basis.size() != spec.num_data) {
    throw std::invalid_argument("inconsistent protocol spec");
  }
  if (forced_pattern && k < 32 && (*forced_pattern >> k) != 0) {
    throw std::invalid_argument("forced pattern wider than the resource count");
  }
  PatchCircuitBuilder b(d, spec.num_data + k, noise.p_circuit);
  std::vector<size_t> data;
  init_data_patches(b, spec, data);
  b.se_round(data);
  for (const auto& step : spec.cnot_steps) {
    for (const auto& layer : step) {
      for (const auto& c : layer) b.transversal_cnot(c.control, c.target);
    }
    b.se_round(data);
  }

  std::vector<size_t> resources;
  for (size_t r = 0; r < k; ++r) resources.push_back(spec.num_data + r);
  b.init_patches(resources, Basis::X, /*noisy=*/false);
  for (size_t r = 0; r < k; ++r) {
    b.logical_z(resources[r]);
    double p = forced_pattern ? static_cast<double>((*forced_pattern >> r) & 1) : noise.p_in;
    b.inject_logical_z(resources[r], p);
  }
  for (const auto& [j, r] : spec.consumption) b.transversal_cnot(j, spec.num_data + r);
  std::vector<size_t> live = data;
  live.insert(live.end(), resources.begin(), resources.end());
  b.se_round(live);

  std::vector<std::vector<uint32_t>> chain(live.size());
  for (size_t patch : live) {
    chain[patch] = b.logical_chain(b.measure_patch(patch, Basis::X), Basis::X);
  }
  for (size_t c = 0; c < spec.checks.size(); ++c) {
    std::vector<uint32_t> ms;
    for (size_t j : spec.checks[c]) append_chain(ms, chain[j]);
    b.circuit().check(static_cast<uint32_t>(c), std::move(ms));
  }
  std::vector<uint32_t> out = chain[0];
  for (size_t j : spec.output_support) append_chain(out, chain[j]);
  b.circuit().observable(0, std::move(out));
  std::vector<uint32_t> frame;
  for (size_t j : spec.frame_rule.m_indices) append_chain(frame, chain[j]);
  for (size_t j : spec.frame_rule.n_indices) append_chain(frame, chain[spec.num_data + j - 1]);
  b.circuit().frame(0, std::move(frame));
  return b.take();
}

size_t subcircuit_rounds(const protocols::ProtocolSpec& spec) { return spec.cnot_steps.size() + 1; }

Circuit build_cnot_subcircuit_experiment(const protocols::ProtocolSpec& spec, size_t d,
                                         const NoiseModel& noise) {
  PatchCircuitBuilder b(d, spec.num_data, noise.p_circuit);
  std::vector<size_t> data;
  init_data_patches(b, spec, data);
  b.se_round(data);
  for (const auto& step : spec.cnot_steps) {
    for (const auto& layer : step) {
      for (const auto& c : layer) b.transversal_cnot(c.control, c.target);
    }
    b.se_round(data);
  }
  auto cnots = spec.flat_cnots();
  for (auto it = cnots.rbegin(); it != cnots.rend(); ++it) b.transversal_cnot(it->control, it->target);
  for (size_t patch : data) {
    Basis basis = spec.init_basis[patch];
    auto chain = b.logical_chain(b.measure_patch(patch, basis), basis);
    b.circuit().observable(static_cast<uint32_t>(patch), std::move(chain));
  }
  return b.take();
}

}  // namespace msd::surface
