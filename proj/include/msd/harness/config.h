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

#ifndef MSD_HARNESS_CONFIG_H
#define MSD_HARNESS_CONFIG_H

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "msd/harness/experiment.h"

namespace msd::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key = value lines; '#' starts a comment. Later keys override earlier ones.
std::map<std::string, std::string> parse_key_values(std::istream& in);

// Keys: protocol, d, p_circuit, p_in (comma separated), shots, seed,
// max_iters, out, format.
void apply_config(const std::map<std::string, std::string>& kv, ExperimentConfig& config);

void load_config_file(const std::string& path, ExperimentConfig& config);

std::vector<double> parse_double_list(const std::string& text);

}  // namespace msd::harness

#endif  // MSD_HARNESS_CONFIG_H
