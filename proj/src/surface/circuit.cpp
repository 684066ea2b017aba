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

#include "msd/surface/circuit.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace msd::surface {

namespace {

constexpr std::array<std::string_view, 17> kNames = {
    "R", "RX", "H", "S", "X", "Z", "CX", "DEPOLARIZE1", "DEPOLARIZE2", "M", "MX",
    "E", "TICK", "DETECTOR", "OBSERVABLE", "CHECK", "FRAME"};

bool has_probability(OpCode op) {
  return op == OpCode::kDepolarize1 || op == OpCode::kDepolarize2 || op == OpCode::kM ||
         op == OpCode::kMX || op == OpCode::kInjectZ;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability out of [0, 1]");
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view opcode_name(OpCode op) { return kNames[static_cast<size_t>(op)]; }

bool is_noise(OpCode op) {
  return op == OpCode::kDepolarize1 || op == OpCode::kDepolarize2 || op == OpCode::kInjectZ;
}

bool is_annotation(OpCode op) {
  return op == OpCode::kDetector || op == OpCode::kObservable || op == OpCode::kCheck ||
         op == OpCode::kFrame;
}

uint32_t Circuit::add_qubit(QubitInfo info) {
  qubits_.push_back(info);
  num_patches_ = std::max<size_t>(num_patches_, info.patch + 1);
  return static_cast<uint32_t>(qubits_.size() - 1);
}

void Circuit::check_qubits(const std::vector<uint32_t>& qubits) const {
  for (uint32_t q : qubits) {
    if (q >= qubits_.size()) throw std::out_of_range("qubit index out of range");
  }
}

void Circuit::check_measurements(const std::vector<uint32_t>& ms) const {
  for (uint32_t m : ms) {
    if (m >= num_measurements_) {
      throw std::out_of_range("annotation refers to a measurement that has not happened");
    }
  }
}

void Circuit::append(Instruction inst) {
  switch (inst.op) {
    case OpCode::kCX:
    case OpCode::kDepolarize2:
      if (inst.targets.size() % 2 != 0) throw std::invalid_argument("odd pair target list");
      for (size_t i = 0; i < inst.targets.size(); i += 2) {
        if (inst.targets[i] == inst.targets[i + 1]) {
          throw std::invalid_argument("two-qubit operation on a single qubit");
        }
      }
      check_qubits(inst.targets);
      break;
    case OpCode::kTick:
      inst.targets.clear();
      break;
    case OpCode::kDetector:
      if (inst.arg >= num_patches_) throw std::out_of_range("detector home patch out of range");
      check_measurements(inst.targets);
      detector_home_.push_back(inst.arg);
      break;
    case OpCode::kObservable:
      check_measurements(inst.targets);
      num_observables_ = std::max<size_t>(num_observables_, inst.arg + 1);
      break;
    case OpCode::kCheck:
      check_measurements(inst.targets);
      num_checks_ = std::max<size_t>(num_checks_, inst.arg + 1);
      break;
    case OpCode::kFrame:
      check_measurements(inst.targets);
      num_frames_ = std::max<size_t>(num_frames_, inst.arg + 1);
      break;
    default:
      check_qubits(inst.targets);
      break;
  }
  if (has_probability(inst.op)) check_probability(inst.p);
  if (inst.op == OpCode::kM || inst.op == OpCode::kMX) num_measurements_ += inst.targets.size();
  instructions_.push_back(std::move(inst));
}

void Circuit::reset(pauli::Basis basis, const std::vector<uint32_t>& qubits) {
  if (qubits.empty()) return;
  append({basis == pauli::Basis::X ? OpCode::kRX : OpCode::kR, 0.0, 0, qubits});
}

void Circuit::gate(OpCode op, const std::vector<uint32_t>& qubits) {
  if (op != OpCode::kH && op != OpCode::kS && op != OpCode::kX && op != OpCode::kZ) {
    throw std::invalid_argument("not a single-qubit gate");
  }
  if (qubits.empty()) return;
  append({op, 0.0, 0, qubits});
}

void Circuit::cx(const std::vector<uint32_t>& pairs) {
  if (pairs.empty()) return;
  append({OpCode::kCX, 0.0, 0, pairs});
}

void Circuit::depolarize1(double p, const std::vector<uint32_t>& qubits) {
  check_probability(p);
  if (p == 0.0 || qubits.empty()) return;
  append({OpCode::kDepolarize1, p, 0, qubits});
}

void Circuit::depolarize2(double p, const std::vector<uint32_t>& pairs) {
  check_probability(p);
  if (p == 0.0 || pairs.empty()) return;
  append({OpCode::kDepolarize2, p, 0, pairs});
}

void Circuit::inject_z(double p, const std::vector<uint32_t>& qubits) {
  check_probability(p);
  if (p == 0.0 || qubits.empty()) return;
  append({OpCode::kInjectZ, p, 0, qubits});
}

uint32_t Circuit::measure(pauli::Basis basis, double p, const std::vector<uint32_t>& qubits) {
  uint32_t first = static_cast<uint32_t>(num_measurements_);
  if (!qubits.empty()) append({basis == pauli::Basis::X ? OpCode::kMX : OpCode::kM, p, 0, qubits});
  return first;
}

void Circuit::tick() { append({OpCode::kTick, 0.0, 0, {}}); }

uint32_t Circuit::detector(uint32_t home_patch, std::vector<uint32_t> measurements) {
  std::sort(measurements.begin(), measurements.end());
  append({OpCode::kDetector, 0.0, home_patch, std::move(measurements)});
  return static_cast<uint32_t>(detector_home_.size() - 1);
}

void Circuit::observable(uint32_t id, std::vector<uint32_t> measurements) {
  std::sort(measurements.begin(), measurements.end());
  append({OpCode::kObservable, 0.0, id, std::move(measurements)});
}

void Circuit::check(uint32_t id, std::vector<uint32_t> measurements) {
  std::sort(measurements.begin(), measurements.end());
  append({OpCode::kCheck, 0.0, id, std::move(measurements)});
}

void Circuit::frame(uint32_t id, std::vector<uint32_t> measurements) {
  std::sort(measurements.begin(), measurements.end());
  append({OpCode::kFrame, 0.0, id, std::move(measurements)});
}

size_t Circuit::count_ops(OpCode op) const {
  return static_cast<size_t>(std::count_if(instructions_.begin(), instructions_.end(),
                                            [op](const Instruction& i) { return i.op == op; }));
}

std::string Circuit::to_text() const {
  std::ostringstream out;
  for (size_t q = 0; q < qubits_.size(); ++q) {
    out << "QUBIT(" << qubits_[q].patch << ") " << q << ' ' << qubits_[q].x << ' ' << qubits_[q].y
        << '\n';
  }
  for (const auto& inst : instructions_) {
    out << opcode_name(inst.op);
    if (is_annotation(inst.op)) {
      out << '(' << inst.arg << ')';
    } else if (has_probability(inst.op) && inst.p != 0.0) {
      out << '(' << format_double(inst.p) << ')';
    }
    for (uint32_t t : inst.targets) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

namespace {

template <typename T>
T parse_number(std::string_view s, size_t line_no) {
  T value{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad number '" +
                                std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Circuit Circuit::from_text(std::string_view text) {
  Circuit c;
  size_t line_no = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    std::string_view head = tokens[0];
    std::string_view name = head;
    std::string_view paren;
    if (size_t open = head.find('('); open != std::string_view::npos) {
      if (head.back() != ')') {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unbalanced '('");
      }
      name = head.substr(0, open);
      paren = head.substr(open + 1, head.size() - open - 2);
    }
    if (name == "QUBIT") {
      if (tokens.size() != 4 || paren.empty()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad QUBIT line");
      }
      uint32_t q = parse_number<uint32_t>(tokens[1], line_no);
      if (q != c.qubits_.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": qubits out of order");
      }
      c.add_qubit({parse_number<uint32_t>(paren, line_no), parse_number<int>(tokens[2], line_no),
                   parse_number<int>(tokens[3], line_no)});
      continue;
    }
    auto it = std::find(kNames.begin(), kNames.end(), name);
    if (it == kNames.end()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown instruction '" +
                                  std::string(name) + "'");
    }
    Instruction inst;
    inst.op = static_cast<OpCode>(it - kNames.begin());
    if (is_annotation(inst.op)) {
      inst.arg = parse_number<uint32_t>(paren, line_no);
    } else if (!paren.empty()) {
      if (!has_probability(inst.op)) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unexpected argument");
      }
      inst.p = parse_number<double>(paren, line_no);
    }
    for (size_t i = 1; i < tokens.size(); ++i) {
      inst.targets.push_back(parse_number<uint32_t>(tokens[i], line_no));
    }
    c.append(std::move(inst));
  }
  return c;
}

}  // namespace msd::surface
