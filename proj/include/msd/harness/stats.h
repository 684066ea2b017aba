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

#ifndef MSD_HARNESS_STATS_H
#define MSD_HARNESS_STATS_H

#include <cstdint>
#include <string>
#include <vector>

namespace msd::harness {

struct Interval {
  double lo;
  double hi;
};

// Wilson score interval; z = 1.96 gives 95%.
Interval wilson_interval(uint64_t successes, uint64_t trials, double z = 1.959963984540054);

struct ExperimentStats {
  std::string protocol;
  size_t d = 0;
  double p_circuit = 0.0;
  double p_in = 0.0;
  uint64_t seed = 0;
  uint64_t shots_total = 0;
  uint64_t shots_accepted = 0;
  uint64_t output_errors = 0;  // among accepted shots
  // Index = sweeps used; a non-converged shot is counted one past its cap.
  std::vector<uint64_t> iterations_histogram;
  uint64_t not_converged = 0;

  double p_out_hat() const;
  double discard_ratio() const;
  Interval p_out_interval() const;
  // Binomial standard errors of the two estimates.
  double p_out_sigma() const;
  double discard_sigma() const;

  void record_iterations(int sweeps, bool converged);
  // Fraction of decoded shots that converged within max_sweeps sweeps.
  double fraction_within(int max_sweeps) const;
  uint64_t decoded_shots() const;
  void merge(const ExperimentStats& other);
};

// |observed - expected| <= k sigma, where sigma is the binomial standard
// error at the expected rate.
bool within_sigma(double observed, double expected, uint64_t trials, double k);

}  // namespace msd::harness

#endif  // MSD_HARNESS_STATS_H
