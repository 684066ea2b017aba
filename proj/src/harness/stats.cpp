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

#include "msd/harness/stats.h"

#include <cmath>
#include <stdexcept>

namespace msd::harness {

Interval wilson_interval(uint64_t successes, uint64_t trials, double z) {
  if (successes > trials) throw std::invalid_argument("more successes than trials");
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  Interval out{std::max(0.0, center - half), std::min(1.0, center + half)};
  // Guard against rounding at the edges so the point estimate stays inside.
  if (successes == 0) out.lo = 0.0;
  if (successes == trials) out.hi = 1.0;
  out.lo = std::min(out.lo, phat);
  out.hi = std::max(out.hi, phat);
  return out;
}

double ExperimentStats::p_out_hat() const {
  return shots_accepted == 0 ? 0.0
                             : static_cast<double>(output_errors) /
                                   static_cast<double>(shots_accepted);
}

double ExperimentStats::discard_ratio() const {
  return shots_total == 0 ? 0.0
                          : 1.0 - static_cast<double>(shots_accepted) /
                                      static_cast<double>(shots_total);
}

Interval ExperimentStats::p_out_interval() const {
  return wilson_interval(output_errors, shots_accepted);
}

double ExperimentStats::p_out_sigma() const {
  if (shots_accepted == 0) return 0.0;
  double p = p_out_hat();
  return std::sqrt(p * (1 - p) / static_cast<double>(shots_accepted));
}

double ExperimentStats::discard_sigma() const {
  if (shots_total == 0) return 0.0;
  double p = discard_ratio();
  return std::sqrt(p * (1 - p) / static_cast<double>(shots_total));
}

void ExperimentStats::record_iterations(int sweeps, bool converged) {
  if (sweeps < 0) throw std::invalid_argument("negative sweep count");
  // A shot that hit the cap without converging needed more sweeps than it got.
  if (!converged) ++sweeps;
  if (iterations_histogram.size() <= static_cast<size_t>(sweeps)) {
    iterations_histogram.resize(sweeps + 1, 0);
  }
  iterations_histogram[sweeps]++;
  if (!converged) ++not_converged;
}

uint64_t ExperimentStats::decoded_shots() const {
  uint64_t n = 0;
  for (uint64_t c : iterations_histogram) n += c;
  return n;
}

double ExperimentStats::fraction_within(int max_sweeps) const {
  uint64_t total = decoded_shots();
  if (total == 0) return 1.0;
  uint64_t ok = 0;
  for (size_t i = 0; i < iterations_histogram.size() && i <= static_cast<size_t>(max_sweeps); ++i) {
    ok += iterations_histogram[i];
  }
  return static_cast<double>(ok) / static_cast<double>(total);
}

void ExperimentStats::merge(const ExperimentStats& other) {
  shots_total += other.shots_total;
  shots_accepted += other.shots_accepted;
  output_errors += other.output_errors;
  not_converged += other.not_converged;
  if (iterations_histogram.size() < other.iterations_histogram.size()) {
    iterations_histogram.resize(other.iterations_histogram.size(), 0);
  }
  for (size_t i = 0; i < other.iterations_histogram.size(); ++i) {
    iterations_histogram[i] += other.iterations_histogram[i];
  }
}

bool within_sigma(double observed, double expected, uint64_t trials, double k) {
  if (trials == 0) return false;
  double sigma = std::sqrt(expected * (1 - expected) / static_cast<double>(trials));
  return std::abs(observed - expected) <= k * sigma + 1e-15;
}

}  // namespace msd::harness
