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

#include "msd/harness/config.h"

#include <charconv>
#include <fstream>
#include <istream>

namespace msd::harness {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
  T v{};
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("bad value for '" + key + "': '" + text + "'");
  }
  return v;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string item = trim(text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start));
    out.push_back(parse_value<double>("p_in", item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void apply_config(const std::map<std::string, std::string>& kv, ExperimentConfig& config) {
  for (const auto& [key, value] : kv) {
    if (key == "protocol") {
      try {
        config.protocol = protocols::parse_protocol(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "d") {
      config.d = parse_value<size_t>(key, value);
    } else if (key == "p_circuit") {
      config.p_circuit = parse_value<double>(key, value);
    } else if (key == "p_in") {
      config.p_in = parse_double_list(value);
    } else if (key == "shots") {
      config.shots = parse_value<uint64_t>(key, value);
    } else if (key == "seed") {
      config.seed = parse_value<uint64_t>(key, value);
    } else if (key == "max_iters") {
      config.decoder.max_global_iters = parse_value<int>(key, value);
    } else if (key == "out") {
      config.output_path = value;
    } else if (key == "format") {
      config.format = value;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

void load_config_file(const std::string& path, ExperimentConfig& config) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  apply_config(parse_key_values(f), config);
}

}  // namespace msd::harness
