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

#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locprobe {

// RX/RZ/RZZ are the logical rotations exp(-i theta/2 P); CNOT/RZ/SX/X form
// the device basis the transpiler targets.
enum class GateKind { kRX, kRZ, kRZZ, kCNOT, kSX, kX };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

struct Gate {
  GateKind kind = GateKind::kRZ;
  // targets[1] is only meaningful for two-qubit gates; CNOT is (control, target).
  std::array<int, 2> targets{0, 0};
  double angle = 0.0;

  int arity() const noexcept {
    return (kind == GateKind::kRZZ || kind == GateKind::kCNOT) ? 2 : 1;
  }
  bool has_angle() const noexcept {
    return kind == GateKind::kRX || kind == GateKind::kRZ || kind == GateKind::kRZZ;
  }
  bool acts_on(int q) const noexcept {
    return targets[0] == q || (arity() == 2 && targets[1] == q);
  }

  static Gate rx(int q, double theta) { return {GateKind::kRX, {q, q}, theta}; }
  static Gate rz(int q, double theta) { return {GateKind::kRZ, {q, q}, theta}; }
  static Gate rzz(int a, int b, double theta) { return {GateKind::kRZZ, {a, b}, theta}; }
  static Gate cnot(int control, int target) { return {GateKind::kCNOT, {control, target}, 0.0}; }
  static Gate sx(int q) { return {GateKind::kSX, {q, q}, 0.0}; }
  static Gate x(int q) { return {GateKind::kX, {q, q}, 0.0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct CircuitMeta {
  int order = 0;  // Trotter order p; 0 when not a Trotter circuit
  int steps = 0;
  double total_time = 0.0;

  friend bool operator==(const CircuitMeta&, const CircuitMeta&) = default;
};

// Ordered gate list on a linear chain of qubits. append() enforces that every
// target is < num_qubits() and that two-qubit gates act on distinct,
// neighbouring qubits.
class Circuit {
 public:
  explicit Circuit(int num_qubits, CircuitMeta meta = {});

  void append(const Gate& gate);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const CircuitMeta& meta() const noexcept { return meta_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_;
  CircuitMeta meta_;
  std::vector<Gate> gates_;
};

// Line-oriented text form: a "# qubits N" header, then one gate per line as
// `KIND target[,target] [angle]`. Angles use the shortest representation that
// round-trips exactly.
void write_circuit(std::ostream& out, const Circuit& circuit);
std::string format_gate(const Gate& gate);
// Throws std::invalid_argument with the offending line number on bad input.
Circuit read_circuit(std::istream& in);

}  // namespace locprobe
