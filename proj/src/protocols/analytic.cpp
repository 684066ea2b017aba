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

#include "msd/protocols/analytic.h"

#include <cmath>
#include <stdexcept>

namespace msd::protocols {

namespace {
void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0, 1]");
}
}  // namespace

double analytic_accept_7to1(double p) {
  check_probability(p);
  const double q = 1.0 - p;
  return std::pow(p, 7) + std::pow(q, 7) + 7 * std::pow(q, 3) * std::pow(p, 4) +
         7 * std::pow(q, 4) * std::pow(p, 3);
}

double analytic_pout_7to1(double p) {
  check_probability(p);
  const double q = 1.0 - p;
  return (7 * std::pow(p, 3) * std::pow(q, 4) + std::pow(p, 7)) / analytic_accept_7to1(p);
}

double analytic_accept_15to1(double p) {
  check_probability(p);
  return (1.0 + 15 * std::pow(1.0 - 2 * p, 8)) / 16.0;
}

double analytic_pout_15to1(double p) {
  check_probability(p);
  const double a = 1.0 - 2 * p;
  return (1.0 - 15 * std::pow(a, 7) + 15 * std::pow(a, 8) - std::pow(a, 15)) /
         (2.0 * (1.0 + 15 * std::pow(a, 8)));
}

double analytic_pout(ProtocolKind kind, double p) {
  return kind == ProtocolKind::SevenToOne ? analytic_pout_7to1(p) : analytic_pout_15to1(p);
}

double analytic_accept(ProtocolKind kind, double p) {
  return kind == ProtocolKind::SevenToOne ? analytic_accept_7to1(p) : analytic_accept_15to1(p);
}

double leading_coefficient(ProtocolKind kind) {
  return kind == ProtocolKind::SevenToOne ? 7.0 : 35.0;
}

}  // namespace msd::protocols
