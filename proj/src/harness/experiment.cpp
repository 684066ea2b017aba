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

#include "msd/harness/experiment.h"

#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "msd/harness/sampler.h"
#include "msd/protocols/logical.h"
#include "msd/surface/builders.h"

namespace msd::harness {

using protocols::ProtocolKind;

void ExperimentConfig::validate() const {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and >= 3");
  if (!(p_circuit >= 0.0 && p_circuit <= 1.0)) throw std::invalid_argument("p_circuit out of range");
  for (double p : p_in) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p_in out of range");
  }
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (decoder.max_global_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
}

std::vector<double> log_grid(double lo, double hi, size_t points_per_decade) {
  if (!(lo > 0 && hi >= lo) || points_per_decade == 0) throw std::invalid_argument("bad grid");
  const double decades = std::log10(hi / lo);
  const size_t n = static_cast<size_t>(std::llround(decades * points_per_decade));
  std::vector<double> out;
  for (size_t i = 0; i <= n; ++i) {
    out.push_back(n == 0 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / n));
  }
  return out;
}

namespace {

uint64_t point_seed(uint64_t seed, size_t index) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(index);
}

ExperimentStats blank_stats(const ExperimentConfig& c, double p_in) {
  ExperimentStats s;
  s.protocol = std::string(protocols::protocol_name(c.protocol));
  s.d = c.d;
  s.p_circuit = c.p_circuit;
  s.p_in = p_in;
  s.seed = c.seed;
  return s;
}

// Samples and decodes shots; calls f(lane view) for each shot.
template <typename F>
void decode_shots(const surface::Circuit& circuit, const decoder::IterativeDecoder& dec,
                  uint64_t shots, uint64_t seed, ExperimentStats& iter_stats, F&& f) {
  BlockSampler sampler(circuit, seed);
  surface::FrameOutput out;
  std::vector<std::vector<uint32_t>> fired;
  for (uint64_t b = 0; b * kBlockShots < shots; ++b) {
    const size_t lanes = static_cast<size_t>(std::min<uint64_t>(kBlockShots, shots - b * kBlockShots));
    sampler.sample_block(b, out);
    fired_detectors(out.detectors, lanes, fired);
    for (size_t lane = 0; lane < lanes; ++lane) {
      decoder::DecodeResult res;
      if (fired[lane].empty()) {
        res.iterations_used = 1;
        res.converged = true;
      } else {
        res = dec.decode(fired[lane]);
      }
      iter_stats.record_iterations(res.iterations_used, res.converged);
      f(out, lane, res);
    }
  }
}

}  // namespace

std::vector<ExperimentStats> run_distillation(const ExperimentConfig& config) {
  config.validate();
  const auto spec = protocols::build_protocol(config.protocol);
  std::vector<ExperimentStats> results;
  std::unique_ptr<decoder::IterativeDecoder> dec;
  for (size_t i = 0; i < config.p_in.size(); ++i) {
    const double p_in = config.p_in[i];
    auto circuit =
        surface::build_distillation_circuit(spec, config.d, {config.p_circuit, p_in});
    // Graphs do not depend on p_in: the injected error has no detectors.
    if (!dec) dec = std::make_unique<decoder::IterativeDecoder>(circuit, config.decoder);
    ExperimentStats s = blank_stats(config, p_in);
    decode_shots(circuit, *dec, config.shots, point_seed(config.seed, i), s,
                 [&](const surface::FrameOutput& out, size_t lane, const decoder::DecodeResult& r) {
                   auto o = decoder::predict_outcome(r, lane_mask(out.checks, lane),
                                                     lane_mask(out.observables, lane),
                                                     out.frames.get(0, lane),
                                                     spec.frame_rule.offset_when_even);
                   s.shots_total++;
                   if (o.accepted) {
                     s.shots_accepted++;
                     if (o.output_error) s.output_errors++;
                   }
                 });
    results.push_back(std::move(s));
  }
  return results;
}

std::vector<ExperimentStats> run_logical(const ExperimentConfig& config) {
  config.validate();
  const auto spec = protocols::build_protocol(config.protocol);
  protocols::LogicalRunner runner(spec);
  const size_t k = spec.num_resources();
  // Accept/error are functions of the pattern alone, so each pattern's
  // tableau run is cached. 0 = not yet run, else 1 + accepted + 2 * error.
  std::vector<uint8_t> memo(size_t{1} << k, 0);
  auto coin_gen = std::make_shared<std::mt19937_64>(config.seed);
  pauli::RandomBitSource coin = [coin_gen]() { return ((*coin_gen)() >> 63) != 0; };
  std::vector<ExperimentStats> results;
  for (size_t i = 0; i < config.p_in.size(); ++i) {
    const double p_in = config.p_in[i];
    ExperimentStats s = blank_stats(config, p_in);
    s.d = 0;
    auto rng = block_rng(point_seed(config.seed, i), 0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (uint64_t shot = 0; shot < config.shots; ++shot) {
      protocols::ErrorPattern pattern = 0;
      for (size_t r = 0; r < k; ++r) {
        if (u(rng) < p_in) pattern |= protocols::ErrorPattern{1} << r;
      }
      uint8_t& m = memo[pattern];
      if (m == 0) {
        auto rec = runner.run(pattern, coin);
        m = static_cast<uint8_t>(1 + (rec.accepted ? 1 : 0) + (rec.output_error ? 2 : 0));
      }
      s.shots_total++;
      if ((m - 1) & 1) {
        s.shots_accepted++;
        if ((m - 1) & 2) s.output_errors++;
      }
    }
    results.push_back(std::move(s));
  }
  return results;
}

MemoryResult run_memory_baseline(const ExperimentConfig& config, size_t rounds) {
  config.validate();
  auto circuit = surface::build_memory_circuit(config.d, rounds, {config.p_circuit, 0.0});
  decoder::IterativeDecoder dec(circuit, config.decoder);
  MemoryResult res;
  res.d = config.d;
  res.rounds = rounds;
  res.p_circuit = config.p_circuit;
  ExperimentStats iters;
  decode_shots(circuit, dec, config.shots, config.seed, iters,
               [&](const surface::FrameOutput& out, size_t lane, const decoder::DecodeResult& r) {
                 res.shots++;
                 if ((lane_mask(out.observables, lane) ^ r.observables) & 1) res.errors++;
               });
  return res;
}

double SubcircuitResult::per_observable_rate() const {
  if (shots == 0 || errors_per_observable.empty()) return 0.0;
  uint64_t total = 0;
  for (uint64_t e : errors_per_observable) total += e;
  return static_cast<double>(total) /
         (static_cast<double>(shots) * static_cast<double>(errors_per_observable.size()));
}

double SubcircuitResult::any_failure_rate() const {
  return shots ? static_cast<double>(any_failure) / static_cast<double>(shots) : 0.0;
}

SubcircuitResult run_subcircuit(const ExperimentConfig& config) {
  config.validate();
  const auto spec = protocols::build_protocol(config.protocol);
  auto circuit = surface::build_cnot_subcircuit_experiment(spec, config.d, {config.p_circuit, 0.0});
  decoder::IterativeDecoder dec(circuit, config.decoder);
  SubcircuitResult res;
  res.rounds = surface::subcircuit_rounds(spec);
  res.errors_per_observable.assign(circuit.num_observables(), 0);
  decode_shots(circuit, dec, config.shots, config.seed, res.decode_stats,
               [&](const surface::FrameOutput& out, size_t lane, const decoder::DecodeResult& r) {
                 res.shots++;
                 uint64_t wrong = lane_mask(out.observables, lane) ^ r.observables;
                 if (wrong) res.any_failure++;
                 while (wrong) {
                   res.errors_per_observable[std::countr_zero(wrong)]++;
                   wrong &= wrong - 1;
                 }
               });
  return res;
}

uint64_t qubit_cycles(ProtocolKind kind, size_t d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  const auto spec = protocols::build_protocol(kind);
  const uint64_t per_d2 = spec.num_data * spec.num_barriers() + spec.num_resources();
  return per_d2 * d * d;
}

std::vector<PatternOutcome> surface_pattern_table(ProtocolKind kind, size_t d) {
  const auto spec = protocols::build_protocol(kind);
  const size_t k = spec.num_resources();
  std::vector<PatternOutcome> out;
  std::unique_ptr<decoder::IterativeDecoder> dec;
  for (uint32_t pattern = 0; pattern < (uint32_t{1} << k); ++pattern) {
    auto circuit = surface::build_distillation_circuit(spec, d, {0.0, 0.0}, pattern);
    if (!dec) dec = std::make_unique<decoder::IterativeDecoder>(circuit);
    BlockSampler sampler(circuit, pattern);
    surface::FrameOutput frame_out;
    sampler.sample_block(0, frame_out);
    std::vector<std::vector<uint32_t>> fired;
    fired_detectors(frame_out.detectors, 1, fired);
    auto r = dec->decode(fired[0]);
    auto o = decoder::predict_outcome(r, lane_mask(frame_out.checks, 0),
                                      lane_mask(frame_out.observables, 0), frame_out.frames.get(0, 0),
                                      spec.frame_rule.offset_when_even);
    out.push_back({pattern, o.accepted, o.output_error, r.iterations_used});
  }
  return out;
}

}  // namespace msd::harness
