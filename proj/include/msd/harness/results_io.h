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

#ifndef MSD_HARNESS_RESULTS_IO_H
#define MSD_HARNESS_RESULTS_IO_H

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "msd/harness/experiment.h"
#include "msd/harness/stats.h"

namespace msd::harness {

inline constexpr const char* kCsvHeader =
    "protocol,d,p_circuit,p_in,shots,accepted,errors,p_out,ci_lo,ci_hi,discard_ratio,seed";

// Shortest representation that parses back to the same double.
std::string format_number(double v);

void write_csv(const std::vector<ExperimentStats>& rows, std::ostream& out);
// Reads what write_csv wrote. Throws std::invalid_argument on malformed input.
std::vector<ExperimentStats> parse_csv(std::istream& in);

void write_json(const std::vector<ExperimentStats>& rows, const ExperimentConfig& config,
                std::ostream& out);

// Columns: p_in, analytic, then p_out/ci_lo/ci_hi for each distance.
void write_plot_data(protocols::ProtocolKind kind,
                     const std::map<size_t, std::vector<ExperimentStats>>& series_by_d,
                     std::ostream& out);

// Writes rows to path in the configured format. Throws std::runtime_error
// when the file cannot be written.
void emit_results(const std::vector<ExperimentStats>& rows, const ExperimentConfig& config,
                  const std::string& path);

}  // namespace msd::harness

#endif  // MSD_HARNESS_RESULTS_IO_H
