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

#ifndef MSD_PROTOCOLS_LOGICAL_H
#define MSD_PROTOCOLS_LOGICAL_H

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "msd/pauli/tableau.h"
#include "msd/protocols/protocol.h"

namespace msd::protocols {

// Bit r set means resource r arrives with a Z error.
using ErrorPattern = uint32_t;

struct ShotRecord {
  std::vector<uint8_t> n_bits;  // resource X readouts, index r
  std::vector<uint8_t> m_bits;  // data X readouts, index j - 1
  bool accepted = false;
  bool frame_offset = false;
  bool output_error = false;
};

// Reference parities from one noiseless tableau run.
struct ReferenceParities {
  std::vector<uint8_t> checks;
  uint8_t output = 0;
};

// Runs the |->-proxy circuit on a stabilizer tableau: one logical qubit per
// data qubit and resource, no syndrome extraction.
class LogicalRunner {
 public:
  explicit LogicalRunner(ProtocolSpec spec);

  const ProtocolSpec& spec() const { return spec_; }
  const ReferenceParities& reference() const { return reference_; }

  ShotRecord run(ErrorPattern pattern, const pauli::RandomBitSource& rng) const;

  // Raw readouts of a single run (no comparison against the reference).
  struct RawShot {
    std::vector<uint8_t> n_bits;
    std::vector<uint8_t> m_bits;
    uint8_t output_x = 0;
    std::vector<uint8_t> check_parities;
    uint8_t output_parity = 0;
  };
  RawShot run_raw(ErrorPattern pattern, const pauli::RandomBitSource& rng) const;

 private:
  ProtocolSpec spec_;
  ReferenceParities reference_;
};

// Convenience wrapper that builds a runner per call.
ShotRecord run_logical_shot(const ProtocolSpec& spec, ErrorPattern pattern,
                            const pauli::RandomBitSource& rng);

// The Clifford tableau after init and the CNOT network, before consumption.
pauli::StabilizerTableau encode_network_state(const ProtocolSpec& spec);

struct OracleEntry {
  ErrorPattern pattern;
  bool accepted;
  bool output_error;
};

// Every error pattern, with exact polynomial aggregates.
struct OracleTable {
  ProtocolKind kind;
  size_t num_resources = 0;
  std::vector<OracleEntry> entries;  // indexed by pattern
  std::vector<uint64_t> accepted_by_weight;
  std::vector<uint64_t> error_by_weight;  // accepted and wrong

  size_t accepted_count() const;
  double p_accept(double p) const;
  double p_accept_and_error(double p) const;
  double p_out(double p) const;
  double discard_ratio(double p) const;
};

OracleTable exhaustive_oracle(const ProtocolSpec& spec);

double discard_ratio(const ProtocolSpec& spec, double p);

// CSV: pattern,accepted,output_error
void write_oracle_csv(const OracleTable& table, std::ostream& out);

}  // namespace msd::protocols

#endif  // MSD_PROTOCOLS_LOGICAL_H
