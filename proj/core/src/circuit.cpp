// Copyright 2026 The locprobe Authors
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

#include "locprobe/circuit.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace locprobe {
namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 6> kNames{{
    {GateKind::kRX, "RX"},
    {GateKind::kRZ, "RZ"},
    {GateKind::kRZZ, "RZZ"},
    {GateKind::kCNOT, "CNOT"},
    {GateKind::kSX, "SX"},
    {GateKind::kX, "X"},
}};

std::string shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

[[noreturn]] void bad_line(int line, const std::string& what) {
  throw std::invalid_argument("circuit line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view text, int line) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    bad_line(line, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

double parse_double(std::string_view text, int line) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    bad_line(line, "bad angle '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Circuit::Circuit(int num_qubits, CircuitMeta meta) : num_qubits_(num_qubits), meta_(meta) {
  if (num_qubits < 1) throw std::invalid_argument("Circuit: need at least one qubit");
}

void Circuit::append(const Gate& gate) {
  const int n = gate.arity();
  for (int i = 0; i < n; ++i) {
    const int q = gate.targets[static_cast<std::size_t>(i)];
    if (q < 0 || q >= num_qubits_) {
      throw std::invalid_argument("Circuit::append: target " + std::to_string(q) +
                                  " outside [0, " + std::to_string(num_qubits_) + ")");
    }
  }
  if (n == 2) {
    const int a = gate.targets[0];
    const int b = gate.targets[1];
    if (a == b || std::abs(a - b) != 1) {
      throw std::invalid_argument(
          "Circuit::append: two-qubit gates need distinct neighbouring targets on the chain");
    }
  }
  Gate stored = gate;
  if (n == 1) stored.targets[1] = stored.targets[0];
  if (!stored.has_angle()) stored.angle = 0.0;
  gates_.push_back(stored);
}

std::string format_gate(const Gate& gate) {
  std::string line{gate_name(gate.kind)};
  line += ' ';
  line += std::to_string(gate.targets[0]);
  if (gate.arity() == 2) {
    line += ',';
    line += std::to_string(gate.targets[1]);
  }
  if (gate.has_angle()) {
    line += ' ';
    line += shortest(gate.angle);
  }
  return line;
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  out << "# qubits " << circuit.num_qubits() << '\n';
  for (const Gate& g : circuit.gates()) out << format_gate(g) << '\n';
}

Circuit read_circuit(std::istream& in) {
  std::vector<std::pair<Gate, int>> parsed;
  int qubits = 0;
  int max_target = -1;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string kind_text;
    if (!(fields >> kind_text)) continue;
    if (kind_text.front() == '#') {
      std::string key;
      if (fields >> key && key == "qubits") {
        std::string value;
        if (!(fields >> value)) bad_line(line, "missing qubit count");
        qubits = parse_int(value, line);
      }
      continue;
    }
    const auto kind = parse_gate_kind(kind_text);
    if (!kind) bad_line(line, "unknown gate kind '" + kind_text + "'");

    Gate gate;
    gate.kind = *kind;
    std::string target_text;
    if (!(fields >> target_text)) bad_line(line, "missing target");
    const auto comma = target_text.find(',');
    if ((comma != std::string::npos) != (gate.arity() == 2)) {
      bad_line(line, "wrong number of targets for " + kind_text);
    }
    if (comma == std::string::npos) {
      gate.targets[0] = gate.targets[1] = parse_int(target_text, line);
    } else {
      gate.targets[0] = parse_int(std::string_view(target_text).substr(0, comma), line);
      gate.targets[1] = parse_int(std::string_view(target_text).substr(comma + 1), line);
    }
    std::string angle_text;
    const bool has_angle_field = static_cast<bool>(fields >> angle_text);
    if (has_angle_field != gate.has_angle()) {
      bad_line(line, gate.has_angle() ? "missing angle" : "unexpected angle");
    }
    if (has_angle_field) gate.angle = parse_double(angle_text, line);
    std::string extra;
    if (fields >> extra) bad_line(line, "trailing field '" + extra + "'");

    max_target = std::max({max_target, gate.targets[0], gate.targets[1]});
    parsed.emplace_back(gate, line);
  }
  if (qubits == 0) qubits = std::max(1, max_target + 1);

  Circuit circuit(qubits);
  for (const auto& [gate, at] : parsed) {
    try {
      circuit.append(gate);
    } catch (const std::invalid_argument& e) {
      bad_line(at, e.what());
    }
  }
  return circuit;
}

}  // namespace locprobe
