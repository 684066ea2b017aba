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

#include "msd/decoder/iterative.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace msd::decoder {

IterativeDecoder::IterativeDecoder(const surface::Circuit& circuit,
                                   const surface::DetectorErrorModel& dem, IterativeConfig config)
    : home_(circuit.detector_home()) {
  set_config(config);
  graphs_.resize(circuit.num_patches());
  build(dem);
}

IterativeDecoder::IterativeDecoder(const surface::Circuit& circuit, IterativeConfig config)
    : IterativeDecoder(circuit, surface::enumerate_error_mechanisms(circuit), config) {}

void IterativeDecoder::set_config(IterativeConfig config) {
  if (config.max_global_iters < 1) throw std::invalid_argument("max_global_iters must be >= 1");
  config_ = config;
}

void IterativeDecoder::build(const surface::DetectorErrorModel& dem) {
  for (size_t p = 0; p < graphs_.size(); ++p) {
    graphs_[p] = build_matching_graph(dem, home_, static_cast<uint32_t>(p));
  }
}

namespace {

std::vector<int> xor_lists(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void write_trace(std::ostream& out, int sweep, size_t patch, const std::vector<int>& eff) {
  out << "SWEEP " << sweep << " PATCH " << patch << " DEFECTS";
  for (int d : eff) out << ' ' << d;
  out << '\n';
}

}  // namespace

DecodeResult IterativeDecoder::decode(const std::vector<uint32_t>& fired,
                                      std::ostream* trace) const {
  const size_t np = graphs_.size();
  std::vector<std::vector<int>> own(np);
  for (uint32_t d : fired) {
    if (d >= home_.size()) throw std::out_of_range("detector id out of range");
    const auto& g = graphs_[home_[d]];
    own[home_[d]].push_back(g.local_of[d]);
  }
  for (auto& v : own) std::sort(v.begin(), v.end());
  std::vector<uint8_t> fired_map(home_.size(), 0);
  for (uint32_t d : fired) fired_map[d] ^= 1;

  DecodeResult res;
  res.per_patch.resize(np);
  std::vector<std::vector<int>> input(np);

  auto effective = [&](size_t p) {
    std::vector<int> t;
    for (size_t q = 0; q < np; ++q) {
      if (q == p) continue;
      for (uint32_t d : res.per_patch[q].foreign) {
        if (home_[d] == p) t.push_back(graphs_[p].local_of[d]);
      }
    }
    std::sort(t.begin(), t.end());
    // Reduce repeated toggles mod 2.
    std::vector<int> reduced;
    for (size_t i = 0; i < t.size();) {
      size_t j = i;
      while (j < t.size() && t[j] == t[i]) ++j;
      if ((j - i) % 2 == 1) reduced.push_back(t[i]);
      i = j;
    }
    return xor_lists(own[p], reduced);
  };

  auto toggles_into = [&](size_t q, size_t p) {
    for (uint32_t d : res.per_patch[q].foreign) {
      if (home_[d] == p) return true;
    }
    return false;
  };

  std::vector<std::pair<uint32_t, size_t>> order(np);
  for (int sweep = 1;; ++sweep) {
    for (size_t p = 0; p < np; ++p) {
      std::vector<int> e = effective(p);
      order[p] = {e.empty() ? UINT32_MAX : graphs_[p].detectors[e.front()], p};
    }
    std::sort(order.begin(), order.end());
    bool changed = false;
    for (auto [first, p] : order) {
      std::vector<int> e = effective(p);
      if (e == input[p]) continue;
      changed = true;
      if (trace) write_trace(*trace, sweep, p, e);
      if (e.empty()) {
        res.per_patch[p] = Correction{};
      } else {
        // Prefer edges that do not toggle back into patches toggling p.
        std::vector<uint8_t> context = fired_map;
        for (size_t q = 0; q < np; ++q) {
          if (q == p || !toggles_into(q, p)) continue;
          for (uint32_t d : graphs_[q].detectors) context[d] = 0;
        }
        res.per_patch[p] = mwpm_decode(graphs_[p], e, &context);
      }
      input[p] = std::move(e);
    }
    if (!changed) {
      res.converged = true;
      res.iterations_used = std::max(1, sweep - 1);
      break;
    }
    if (sweep >= config_.max_global_iters) {
      res.iterations_used = sweep;
      res.converged = true;
      for (size_t p = 0; p < np && res.converged; ++p) res.converged = effective(p) == input[p];
      break;
    }
  }
  for (const auto& c : res.per_patch) {
    res.observables ^= c.observables;
    res.checks ^= c.checks;
    res.frames ^= c.frames;
  }
  return res;
}

DecodeResult iterative_decode(const IterativeDecoder& decoder, const std::vector<uint32_t>& fired) {
  return decoder.decode(fired);
}

PredictedOutcome predict_outcome(const DecodeResult& result, uint64_t measured_checks,
                                 uint64_t measured_observables, bool frame_raw,
                                 bool offset_when_even) {
  PredictedOutcome out;
  out.accepted = (measured_checks ^ result.checks) == 0;
  out.output_error = ((measured_observables ^ result.observables) & 1) != 0;
  bool frame = frame_raw ^ static_cast<bool>(result.frames & 1);
  out.frame_offset = offset_when_even ? !frame : frame;
  return out;
}

}  // namespace msd::decoder
