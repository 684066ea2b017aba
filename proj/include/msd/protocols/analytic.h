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

#ifndef MSD_PROTOCOLS_ANALYTIC_H
#define MSD_PROTOCOLS_ANALYTIC_H

#include "msd/protocols/protocol.h"

namespace msd::protocols {

// Output error of an ideal 7-to-1 circuit fed with inputs of error p.
double analytic_pout_7to1(double p);
// Output error of an ideal 15-to-1 circuit.
double analytic_pout_15to1(double p);
double analytic_pout(ProtocolKind kind, double p);

// Acceptance probability of the ideal circuits (the formulas' denominators).
double analytic_accept_7to1(double p);
double analytic_accept_15to1(double p);
double analytic_accept(ProtocolKind kind, double p);

// Leading-order coefficient c in p_out ~ c p^3.
double leading_coefficient(ProtocolKind kind);

}  // namespace msd::protocols

#endif  // MSD_PROTOCOLS_ANALYTIC_H
