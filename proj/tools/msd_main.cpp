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

// msd: command-line front end for the distillation simulator.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msd/harness/config.h"
#include "msd/harness/experiment.h"
#include "msd/harness/results_io.h"
#include "msd/protocols/analytic.h"
#include "msd/protocols/logical.h"

namespace {

using msd::harness::ExperimentConfig;
using msd::protocols::ProtocolKind;

constexpr int kConfigError = 2;
constexpr int kOracleFailure = 3;

struct Flags {
  std::string config_file;
  std::string protocol;
  size_t d = 0;
  double p_circuit = 0;
  std::vector<double> p_in;
  uint64_t shots = 0;
  uint64_t seed = 0;
  int max_iters = 0;
  std::string out;
  std::string format;
  size_t rounds = 5;
};

void add_common(CLI::App* sub, Flags& f, std::vector<CLI::Option*>& opts) {
  opts.push_back(sub->add_option("--config", f.config_file, "key=value config file"));
  opts.push_back(sub->add_option("--protocol", f.protocol, "7to1 or 15to1"));
  opts.push_back(sub->add_option("--d", f.d, "code distance"));
  opts.push_back(sub->add_option("--p-circuit", f.p_circuit, "circuit noise strength"));
  opts.push_back(sub->add_option("--p-in", f.p_in, "input error rate (repeatable)"));
  opts.push_back(sub->add_option("--shots", f.shots, "shots per point"));
  opts.push_back(sub->add_option("--seed", f.seed, "base seed"));
  opts.push_back(sub->add_option("--max-iters", f.max_iters, "decoder sweep cap"));
  opts.push_back(sub->add_option("--out", f.out, "output file (stdout when empty)"));
  opts.push_back(sub->add_option("--format", f.format, "csv or json"));
}

ExperimentConfig resolve(const CLI::App& sub, const Flags& f) {
  ExperimentConfig c;
  if (!f.config_file.empty()) msd::harness::load_config_file(f.config_file, c);
  auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
  try {
    if (given("--protocol")) c.protocol = msd::protocols::parse_protocol(f.protocol);
  } catch (const std::invalid_argument& e) {
    throw msd::harness::ConfigError(e.what());
  }
  if (given("--d")) c.d = f.d;
  if (given("--p-circuit")) c.p_circuit = f.p_circuit;
  if (given("--p-in")) c.p_in = f.p_in;
  if (given("--shots")) c.shots = f.shots;
  if (given("--seed")) c.seed = f.seed;
  if (given("--max-iters")) c.decoder.max_global_iters = f.max_iters;
  if (given("--out")) c.output_path = f.out;
  if (given("--format")) c.format = f.format;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw msd::harness::ConfigError(e.what());
  }
  return c;
}

void emit(const std::vector<msd::harness::ExperimentStats>& rows, const ExperimentConfig& c) {
  if (!c.output_path.empty()) {
    msd::harness::emit_results(rows, c, c.output_path);
    return;
  }
  if (c.format == "json") {
    msd::harness::write_json(rows, c, std::cout);
  } else {
    msd::harness::write_csv(rows, std::cout);
  }
}

std::vector<ProtocolKind> selected(const CLI::App& sub, const Flags& f) {
  if (sub.get_option("--protocol")->count() == 0) {
    return {ProtocolKind::SevenToOne, ProtocolKind::FifteenToOne};
  }
  return {msd::protocols::parse_protocol(f.protocol)};
}

int cmd_analytic(const CLI::App& sub, const Flags& f) {
  std::vector<double> grid = f.p_in.empty() ? msd::harness::log_grid(1e-3, 0.5, 4) : f.p_in;
  std::cout << "protocol,p,p_out,p_accept,discard_ratio\n";
  for (ProtocolKind kind : selected(sub, f)) {
    for (double p : grid) {
      double acc = msd::protocols::analytic_accept(kind, p);
      std::cout << msd::protocols::protocol_name(kind) << ',' << msd::harness::format_number(p)
                << ',' << msd::harness::format_number(msd::protocols::analytic_pout(kind, p)) << ','
                << msd::harness::format_number(acc) << ','
                << msd::harness::format_number(1.0 - acc) << '\n';
    }
  }
  return 0;
}

int cmd_oracle(const CLI::App& sub, const Flags& f) {
  bool ok = true;
  for (ProtocolKind kind : selected(sub, f)) {
    auto spec = msd::protocols::build_protocol(kind);
    auto table = msd::protocols::exhaustive_oracle(spec);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      double p = 0.5 * i / 19.0;
      worst = std::max(worst, std::abs(table.p_out(p) - msd::protocols::analytic_pout(kind, p)));
      worst = std::max(worst,
                       std::abs(table.p_accept(p) - msd::protocols::analytic_accept(kind, p)));
    }
    bool pass = worst <= 1e-12;
    ok = ok && pass;
    std::printf("%s: %zu patterns, %zu accepted, max |oracle - closed form| = %.3g  %s\n",
                std::string(msd::protocols::protocol_name(kind)).c_str(), table.entries.size(),
                table.accepted_count(), worst, pass ? "PASS" : "FAIL");
    if (!f.out.empty()) {
      std::string path = f.out;
      if (sub.get_option("--protocol")->count() == 0) {
        path += "." + std::string(msd::protocols::protocol_name(kind));
      }
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open '" + path + "'");
      msd::protocols::write_oracle_csv(table, out);
    }
  }
  return ok ? 0 : kOracleFailure;
}

int cmd_memory(const ExperimentConfig& c, size_t rounds) {
  auto r = msd::harness::run_memory_baseline(c, rounds);
  auto ci = r.interval();
  std::printf("d,rounds,p_circuit,shots,errors,rate,ci_lo,ci_hi\n%zu,%zu,%s,%llu,%llu,%s,%s,%s\n",
              r.d, r.rounds, msd::harness::format_number(r.p_circuit).c_str(),
              static_cast<unsigned long long>(r.shots), static_cast<unsigned long long>(r.errors),
              msd::harness::format_number(r.rate()).c_str(),
              msd::harness::format_number(ci.lo).c_str(), msd::harness::format_number(ci.hi).c_str());
  return 0;
}

int cmd_subcircuit(const ExperimentConfig& c) {
  auto sub = msd::harness::run_subcircuit(c);
  auto mem = msd::harness::run_memory_baseline(c, sub.rounds);
  std::printf("protocol=%s d=%zu p_circuit=%s rounds=%zu shots=%llu\n",
              std::string(msd::protocols::protocol_name(c.protocol)).c_str(), c.d,
              msd::harness::format_number(c.p_circuit).c_str(), sub.rounds,
              static_cast<unsigned long long>(sub.shots));
  for (size_t j = 0; j < sub.errors_per_observable.size(); ++j) {
    std::printf("observable %zu: %llu errors\n", j,
                static_cast<unsigned long long>(sub.errors_per_observable[j]));
  }
  std::printf("per-observable rate %.4g, any-failure rate %.4g, memory rate %.4g, ratio %.3f\n",
              sub.per_observable_rate(), sub.any_failure_rate(), mem.rate(),
              mem.rate() > 0 ? sub.per_observable_rate() / mem.rate() : 0.0);
  return 0;
}

int cmd_cost(const CLI::App& sub, const Flags& f) {
  std::vector<size_t> ds = sub.get_option("--d")->count() ? std::vector<size_t>{f.d}
                                                          : std::vector<size_t>{3, 5, 7, 9};
  std::cout << "protocol,d,qubit_cycles\n";
  for (ProtocolKind kind : selected(sub, f)) {
    for (size_t d : ds) {
      std::cout << msd::protocols::protocol_name(kind) << ',' << d << ','
                << msd::harness::qubit_cycles(kind, d) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magic-state distillation on surface codes: simulation and decoding"};
  app.require_subcommand(1);
  Flags f;
  std::vector<CLI::Option*> opts;
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"analytic", "closed-form output error and acceptance tables"},
      {"oracle", "exhaustive enumeration checked against the closed forms"},
      {"logical", "logical-level Monte Carlo"},
      {"distill", "surface-code distillation Monte Carlo"},
      {"memory", "single-patch memory baseline"},
      {"subcircuit", "CNOT sub-circuit versus memory baseline"},
      {"cost", "qubit-cycle cost"}};
  std::map<std::string, CLI::App*> cmds;
  for (const auto& [name, help] : subs) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, f, opts);
    if (name == "memory") s->add_option("--rounds", f.rounds, "SE rounds");
    cmds[name] = s;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }
  try {
    for (const auto& [name, s] : cmds) {
      if (!s->parsed()) continue;
      if (name == "analytic") return cmd_analytic(*s, f);
      if (name == "oracle") return cmd_oracle(*s, f);
      if (name == "cost") return cmd_cost(*s, f);
      ExperimentConfig c = resolve(*s, f);
      if (name == "logical") {
        emit(msd::harness::run_logical(c), c);
      } else if (name == "distill") {
        emit(msd::harness::run_distillation(c), c);
      } else if (name == "memory") {
        return cmd_memory(c, f.rounds);
      } else if (name == "subcircuit") {
        return cmd_subcircuit(c);
      }
      return 0;
    }
  } catch (const msd::harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
