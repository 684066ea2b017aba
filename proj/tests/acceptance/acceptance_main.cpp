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


// acceptance: runs the numbered acceptance criteria and prints one
// PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msd/decoder/matching_graph.h"
#include "msd/harness/experiment.h"
#include "msd/harness/results_io.h"
#include "msd/harness/stats.h"
#include "msd/protocols/analytic.h"
#include "msd/protocols/logical.h"

namespace {

using msd::harness::ExperimentConfig;
using msd::harness::ExperimentStats;
using msd::protocols::ProtocolKind;
using Clock = std::chrono::steady_clock;

const ProtocolKind kBoth[] = {ProtocolKind::SevenToOne, ProtocolKind::FifteenToOne};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const char* name(ProtocolKind k) { return k == ProtocolKind::SevenToOne ? "7to1" : "15to1"; }

void note(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void note(const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  std::printf("    ");
  std::vprintf(fmt, ap);
  std::printf("\n");
  va_end(ap);
  std::fflush(stdout);
}

struct Options {
  uint64_t shots = 100000;
  uint64_t seed = 20261016;
  std::vector<int> only;
  std::vector<int> allow_fail;
};

// Decoder statistics pooled over criteria 4 and 5 for criterion 6.
ExperimentStats g_iterations;

bool criterion_1(const Options&) {
  auto t0 = Clock::now();
  double worst = 0;
  for (auto kind : kBoth) {
    auto table = msd::protocols::exhaustive_oracle(msd::protocols::build_protocol(kind));
    for (int i = 0; i < 20; ++i) {
      double p = 0.5 * i / 19.0;
      worst = std::max(worst, std::abs(table.p_out(p) - msd::protocols::analytic_pout(kind, p)));
    }
  }
  double t = seconds_since(t0);
  note("max |oracle - closed form| = %.3g over 20 points, %.2f s", worst, t);
  return worst <= 1e-12 && t < 10;
}

bool criterion_2(const Options&) {
  const double p = 1e-4;
  double r7 = msd::protocols::analytic_pout_7to1(p) / (7 * p * p * p);
  double r15 = msd::protocols::analytic_pout_15to1(p) / (35 * p * p * p);
  note("p_out/7p^3 = %.5f, p_out/35p^3 = %.5f", r7, r15);
  auto in = [](double r) { return r >= 0.99 && r <= 1.01; };
  return in(r7) && in(r15);
}

// Checks a row against the closed forms at k sigma.
bool matches_closed_form(ProtocolKind kind, const ExperimentStats& s, double k) {
  double want_out = msd::protocols::analytic_pout(kind, s.p_in);
  double want_discard = 1 - msd::protocols::analytic_accept(kind, s.p_in);
  bool out_ok = msd::harness::within_sigma(s.p_out_hat(), want_out, s.shots_accepted, k);
  bool discard_ok = msd::harness::within_sigma(s.discard_ratio(), want_discard, s.shots_total, k);
  note("%s p_in=%g: p_out %.4g (closed form %.4g), discard %.4f (%.4f)  %s", name(kind), s.p_in,
       s.p_out_hat(), want_out, s.discard_ratio(), want_discard,
       out_ok && discard_ok ? "ok" : "off");
  return out_ok && discard_ok;
}

bool criterion_3(const Options& o) {
  auto t0 = Clock::now();
  bool ok = true;
  for (auto kind : kBoth) {
    ExperimentConfig c;
    c.protocol = kind;
    c.p_in = {0.01, 0.05, 0.1, 0.3};
    c.shots = std::max<uint64_t>(o.shots, 100000) * 10;
    c.seed = o.seed;
    for (const auto& s : msd::harness::run_logical(c)) ok &= matches_closed_form(kind, s, 3);
  }
  double t = seconds_since(t0);
  note("%.1f s", t);
  return ok && t < 120;
}

bool criterion_4(const Options& o) {
  auto t0 = Clock::now();
  bool ok = true;
  for (auto kind : kBoth) {
    ExperimentConfig c;
    c.protocol = kind;
    c.d = 3;
    c.p_circuit = 0;
    c.p_in = {0.01, 0.05, 0.1, 0.3};
    c.shots = o.shots;
    c.seed = o.seed + 1;
    c.decoder.max_global_iters = 16;
    for (const auto& s : msd::harness::run_distillation(c)) {
      ok &= matches_closed_form(kind, s, 3);
      g_iterations.merge(s);
    }
  }
  auto table = msd::harness::surface_pattern_table(ProtocolKind::SevenToOne, 3);
  auto oracle =
      msd::protocols::exhaustive_oracle(msd::protocols::build_protocol(ProtocolKind::SevenToOne));
  size_t mismatches = 0;
  for (size_t i = 0; i < table.size(); ++i) {
    const auto& e = oracle.entries[i];
    if (table[i].accepted != e.accepted || (e.accepted && table[i].output_error != e.output_error)) {
      ++mismatches;
    }
  }
  double t = seconds_since(t0);
  note("pattern table: %zu of %zu patterns differ from the oracle; %.1f s", mismatches,
       table.size(), t);
  return ok && mismatches == 0 && table.size() == 128 && t < 600;
}

// Least-squares slope of log p_out against log p_in.
double log_log_slope(const std::vector<ExperimentStats>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double n = 0;
  for (const auto& r : rows) {
    if (r.output_errors == 0) continue;
    double x = std::log(r.p_in), y = std::log(r.p_out_hat());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    n += 1;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool criterion_5(const Options& o) {
  auto t0 = Clock::now();
  ExperimentConfig c;
  c.protocol = ProtocolKind::SevenToOne;
  c.d = 3;
  c.p_circuit = 1e-3;
  c.p_in = {0.05, 0.1, 0.2, 0.3};
  c.shots = o.shots;
  c.seed = o.seed + 2;
  c.decoder.max_global_iters = 16;
  auto rows = msd::harness::run_distillation(c);
  bool within = true;
  for (const auto& s : rows) {
    g_iterations.merge(s);
    double want = msd::protocols::analytic_pout_7to1(s.p_in);
    double ratio = s.p_out_hat() / want;
    bool ok = ratio <= 3 && ratio >= 1.0 / 3;
    within &= ok;
    note("p_in=%g: p_out %.4g, closed form %.4g, ratio %.2f, discard %.4f  %s", s.p_in,
         s.p_out_hat(), want, ratio, s.discard_ratio(), ok ? "ok" : "off");
  }
  double slope = log_log_slope(rows);
  bool slope_ok = std::abs(slope - 3.0) <= 0.5;
  note("log-log slope over [0.05, 0.3]: %.3f (closed form %.3f)", slope,
       std::log(msd::protocols::analytic_pout_7to1(0.3) / msd::protocols::analytic_pout_7to1(0.05)) /
           std::log(0.3 / 0.05));

  c.p_in = {1e-3, 3e-3};
  c.seed = o.seed + 3;
  bool plateau = true;
  for (const auto& s : msd::harness::run_distillation(c)) {
    g_iterations.merge(s);
    auto ci = s.p_out_interval();
    double want = msd::protocols::analytic_pout_7to1(s.p_in);
    // A floor means the measured rate sits well above the cubic curve.
    bool floor = s.output_errors > 0 && ci.lo > 10 * want;
    plateau &= floor;
    note("p_in=%g: p_out %.4g [%.3g, %.3g], closed form %.3g  %s", s.p_in, s.p_out_hat(), ci.lo,
         ci.hi, want, floor ? "floor" : "no floor");
  }
  double t = seconds_since(t0);
  note("%.1f s", t);
  return within && slope_ok && plateau && t < 1800;
}

bool criterion_6(const Options&) {
  double frac = g_iterations.fraction_within(3);
  std::ostringstream hist;
  for (size_t i = 1; i < g_iterations.iterations_histogram.size(); ++i) {
    if (g_iterations.iterations_histogram[i] == 0) continue;
    hist << ' ' << i << ':' << g_iterations.iterations_histogram[i];
  }
  note("sweeps histogram%s (not converged at cap: %llu)", hist.str().c_str(),
       static_cast<unsigned long long>(g_iterations.not_converged));
  note("%.5f%% of %llu decoded shots used at most 3 sweeps", 100 * frac,
       static_cast<unsigned long long>(g_iterations.decoded_shots()));
  return g_iterations.decoded_shots() > 0 && frac >= 0.999;
}

bool criterion_7(const Options& o) {
  bool ok = true;
  for (double p : {5e-4, 1e-3}) {
    ExperimentConfig c;
    c.protocol = ProtocolKind::SevenToOne;
    c.d = 3;
    c.p_circuit = p;
    c.shots = o.shots * 2;
    c.seed = o.seed + 4;
    auto sub = msd::harness::run_subcircuit(c);
    auto mem = msd::harness::run_memory_baseline(c, sub.rounds);
    double ratio = sub.per_observable_rate() / mem.rate();
    bool in = ratio <= 2 && ratio >= 0.5;
    ok &= in;
    note("p_circuit=%g, %zu rounds: per-observable %.4g, memory %.4g, ratio %.2f  %s", p,
         sub.rounds, sub.per_observable_rate(), mem.rate(), ratio, in ? "ok" : "off");
  }
  return ok;
}

// Shortest paths where the boundary node ends paths but never relays them.
std::vector<std::vector<int64_t>> all_pairs(const msd::decoder::MatchingGraph& g) {
  const size_t n = g.num_nodes() + 1;
  const int64_t inf = msd::decoder::kUnreachable;
  std::vector<std::vector<int64_t>> d(n, std::vector<int64_t>(n, inf));
  for (size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.weight);
  }
  for (size_t k = 0; k + 1 < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (d[i][k] < inf && d[k][j] < inf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

int64_t best_pairing(const std::vector<std::vector<int64_t>>& d, std::vector<int> defects,
                     int boundary) {
  const int64_t inf = msd::decoder::kUnreachable;
  if (defects.empty()) return 0;
  int a = defects.back();
  defects.pop_back();
  int64_t best = inf;
  if (d[a][boundary] < inf) best = d[a][boundary] + best_pairing(d, defects, boundary);
  for (size_t i = 0; i < defects.size(); ++i) {
    if (d[a][defects[i]] >= inf) continue;
    auto rest = defects;
    rest.erase(rest.begin() + static_cast<long>(i));
    best = std::min(best, d[a][defects[i]] + best_pairing(d, rest, boundary));
  }
  return std::min(best, inf);
}

bool criterion_8(const Options& o) {
  std::mt19937_64 rng(o.seed + 5);
  std::uniform_int_distribution<int64_t> weight(1, 2000);
  std::uniform_real_distribution<double> u(0, 1);
  size_t mismatches = 0;
  const int graphs = 500;
  for (int g = 0; g < graphs; ++g) {
    const int n = 1 + g % 12;
    msd::decoder::MatchingGraph mg;
    for (int i = 0; i < n; ++i) mg.detectors.push_back(static_cast<uint32_t>(i));
    mg.local_of.assign(n, 0);
    for (int i = 0; i < n; ++i) mg.local_of[i] = i;
    const int bnd = mg.boundary();
    auto add = [&](int a, int b) {
      mg.edges.push_back({a, b, weight(rng), 0.01, 0, 0, 0, 0, {}, {}});
    };
    // A spanning path keeps every node reachable; node 0 always sees the boundary.
    for (int i = 0; i + 1 < n; ++i) add(i, i + 1);
    add(0, bnd);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (u(rng) < 0.3) add(i, j);
      }
      if (i > 0 && u(rng) < 0.4) add(i, bnd);
    }
    mg.compute_paths();
    auto d = all_pairs(mg);
    std::vector<int> defects;
    for (int i = 0; i < n; ++i) {
      if (u(rng) < 0.6) defects.push_back(i);
    }
    if (defects.empty()) defects.push_back(n - 1);
    auto c = msd::decoder::mwpm_decode(mg, defects);
    if (c.weight != best_pairing(d, defects, bnd)) ++mismatches;
  }
  note("%d graphs with 1 to 12 detectors, %zu weight mismatches", graphs, mismatches);
  return mismatches == 0;
}

bool criterion_9(const Options&) {
  bool ok = true;
  for (size_t d : {3, 5, 7, 9}) {
    uint64_t a = msd::harness::qubit_cycles(ProtocolKind::SevenToOne, d);
    uint64_t b = msd::harness::qubit_cycles(ProtocolKind::FifteenToOne, d);
    ok &= a == 47 * d * d && b == 111 * d * d;
    note("d=%zu: 7to1 %llu, 15to1 %llu", d, static_cast<unsigned long long>(a),
         static_cast<unsigned long long>(b));
  }
  return ok;
}

bool criterion_10(const Options& o) {
  ExperimentConfig c;
  c.d = 3;
  c.p_circuit = 1e-3;
  c.p_in = {0.05, 0.2};
  c.shots = 20000;
  c.seed = o.seed + 6;
  auto dump = [&] {
    auto rows = msd::harness::run_distillation(c);
    std::ostringstream csv, json;
    msd::harness::write_csv(rows, csv);
    msd::harness::write_json(rows, c, json);
    return csv.str() + json.str();
  };
  std::string first = dump();
  bool same = first == dump();
  note("repeat run with seed %llu: %s", static_cast<unsigned long long>(c.seed),
       same ? "byte-identical" : "DIFFERENT");

  c.p_in = {0.1};
  c.shots = std::max<uint64_t>(o.shots, 100000);
  auto t0 = Clock::now();
  auto rows = msd::harness::run_distillation(c);
  double t = seconds_since(t0);
  note("%llu shots of d=3 7to1 at p_circuit=1e-3: %.1f s (%.0f shots/s)",
       static_cast<unsigned long long>(rows[0].shots_total), t, rows[0].shots_total / t);
  return same && t < 300;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  Options o;
  app.add_option("--shots", o.shots, "surface-code shots per point");
  app.add_option("--seed", o.seed, "base seed");
  app.add_option("--only", o.only, "run only these criteria");
  app.add_option("--allow-fail", o.allow_fail,
                 "criteria whose FAIL does not change the exit status");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<bool(const Options&)>> criteria = {
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  std::set<int> only(o.only.begin(), o.only.end());
  std::set<int> allowed(o.allow_fail.begin(), o.allow_fail.end());
  // Criterion 6 pools the decoder runs of 4 and 5.
  if (only.count(6)) only.insert({4, 5});
  int unexpected = 0;
  std::vector<int> failed;
  for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) {
    if (!only.empty() && !only.count(i)) continue;
    std::printf("criterion %d:\n", i);
    std::fflush(stdout);
    bool pass = false;
    try {
      pass = criteria[i - 1](o);
    } catch (const std::exception& e) {
      note("exception: %s", e.what());
    }
    std::printf("criterion %d: %s\n", i, pass ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!pass) {
      failed.push_back(i);
      if (!allowed.count(i)) ++unexpected;
    }
  }
  std::printf("summary: %zu failed", failed.size());
  for (int i : failed) std::printf(" %d%s", i, allowed.count(i) ? "(allowed)" : "");
  std::printf("\n");
  return unexpected == 0 ? 0 : 1;
}
