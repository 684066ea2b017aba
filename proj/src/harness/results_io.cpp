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

#include "msd/harness/results_io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "msd/protocols/analytic.h"

namespace msd::harness {

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv(const std::vector<ExperimentStats>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& s : rows) {
    Interval ci = s.p_out_interval();
    out << s.protocol << ',' << s.d << ',' << format_number(s.p_circuit) << ','
        << format_number(s.p_in) << ',' << s.shots_total << ',' << s.shots_accepted << ','
        << s.output_errors << ',' << format_number(s.p_out_hat()) << ',' << format_number(ci.lo)
        << ',' << format_number(ci.hi) << ',' << format_number(s.discard_ratio()) << ',' << s.seed
        << '\n';
  }
}

namespace {

template <typename T>
T parse_field(const std::string& s, size_t line) {
  T v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("csv line " + std::to_string(line) + ": bad field '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<ExperimentStats> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("csv header mismatch");
  }
  std::vector<ExperimentStats> rows;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 12) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 12 fields");
    }
    ExperimentStats s;
    s.protocol = f[0];
    s.d = parse_field<size_t>(f[1], line_no);
    s.p_circuit = parse_field<double>(f[2], line_no);
    s.p_in = parse_field<double>(f[3], line_no);
    s.shots_total = parse_field<uint64_t>(f[4], line_no);
    s.shots_accepted = parse_field<uint64_t>(f[5], line_no);
    s.output_errors = parse_field<uint64_t>(f[6], line_no);
    s.seed = parse_field<uint64_t>(f[11], line_no);
    if (s.shots_accepted > s.shots_total || s.output_errors > s.shots_accepted) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": inconsistent counts");
    }
    rows.push_back(std::move(s));
  }
  return rows;
}

void write_json(const std::vector<ExperimentStats>& rows, const ExperimentConfig& config,
                std::ostream& out) {
  nlohmann::ordered_json j;
  j["config"] = {{"protocol", std::string(protocols::protocol_name(config.protocol))},
                 {"d", config.d},
                 {"p_circuit", config.p_circuit},
                 {"p_in", config.p_in},
                 {"shots", config.shots},
                 {"seed", config.seed},
                 {"max_iters", config.decoder.max_global_iters}};
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& s : rows) {
    Interval ci = s.p_out_interval();
    j["results"].push_back({{"protocol", s.protocol},
                            {"d", s.d},
                            {"p_circuit", s.p_circuit},
                            {"p_in", s.p_in},
                            {"shots", s.shots_total},
                            {"accepted", s.shots_accepted},
                            {"errors", s.output_errors},
                            {"p_out", s.p_out_hat()},
                            {"ci_lo", ci.lo},
                            {"ci_hi", ci.hi},
                            {"discard_ratio", s.discard_ratio()},
                            {"seed", s.seed},
                            {"iterations_histogram", s.iterations_histogram}});
  }
  out << j.dump(2) << '\n';
}

void write_plot_data(protocols::ProtocolKind kind,
                     const std::map<size_t, std::vector<ExperimentStats>>& series_by_d,
                     std::ostream& out) {
  std::set<double> grid;
  for (const auto& [d, rows] : series_by_d) {
    for (const auto& s : rows) grid.insert(s.p_in);
  }
  out << "p_in,analytic";
  for (const auto& [d, rows] : series_by_d) {
    out << ",p_out_d" << d << ",ci_lo_d" << d << ",ci_hi_d" << d;
  }
  out << '\n';
  for (double p : grid) {
    out << format_number(p) << ',' << format_number(protocols::analytic_pout(kind, p));
    for (const auto& [d, rows] : series_by_d) {
      const ExperimentStats* hit = nullptr;
      for (const auto& s : rows) {
        if (s.p_in == p) hit = &s;
      }
      if (hit) {
        Interval ci = hit->p_out_interval();
        out << ',' << format_number(hit->p_out_hat()) << ',' << format_number(ci.lo) << ','
            << format_number(ci.hi);
      } else {
        out << ",,,";
      }
    }
    out << '\n';
  }
}

void emit_results(const std::vector<ExperimentStats>& rows, const ExperimentConfig& config,
                  const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (config.format == "json") {
    write_json(rows, config, f);
  } else {
    write_csv(rows, f);
  }
  f.flush();
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace msd::harness
