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

#include "locprobe/trotter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace locprobe {
namespace {

void check_order_steps(int order, int steps) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("Trotter order must be 1 or 2, got " + std::to_string(order));
  }
  if (steps < 1) {
    throw std::invalid_argument("Trotter steps must be >= 1, got " + std::to_string(steps));
  }
}

void append_ising_slice(Circuit& c, const ChainSpec& spec, const DisorderRealization& real,
                        double delta) {
  for (int j = 0; j + 1 < spec.L; ++j) c.append(Gate::rzz(j, j + 1, 2.0 * spec.J * delta));
  for (int j = 0; j < spec.L; ++j) {
    c.append(Gate::rz(j, 2.0 * real.h[static_cast<std::size_t>(j)] * delta));
  }
}

void append_transverse_slice(Circuit& c, const ChainSpec& spec, double delta) {
  for (int j = 0; j < spec.L; ++j) c.append(Gate::rx(j, -2.0 * spec.Gamma * delta));
}

// Merges a single-qubit gate of `kind` into the previous gate on the same wire
// when that gate has the same kind; otherwise appends.
class WireMerger {
 public:
  explicit WireMerger(int qubits) : last_(static_cast<std::size_t>(qubits), kNone) {}

  void push(const Gate& g, bool mergeable) {
    if (mergeable && g.arity() == 1) {
      const std::size_t prev = last_[static_cast<std::size_t>(g.targets[0])];
      if (prev != kNone && gates_[prev].kind == g.kind && gates_[prev].arity() == 1) {
        gates_[prev].angle += g.angle;
        return;
      }
    }
    gates_.push_back(g);
    for (int i = 0; i < g.arity(); ++i) {
      last_[static_cast<std::size_t>(g.targets[static_cast<std::size_t>(i)])] = gates_.size() - 1;
    }
  }

  std::vector<Gate> take() { return std::move(gates_); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last_;
  std::vector<Gate> gates_;
};

bool is_rotation(GateKind k) { return k == GateKind::kRX || k == GateKind::kRZ; }

}  // namespace

Circuit build_trotter_circuit(const ChainSpec& spec, const DisorderRealization& real,
                              double tau, int order, int steps, const TrotterOptions& options) {
  spec.validate();
  check_order_steps(order, steps);
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("build_trotter_circuit: tau must be finite and >= 0");
  }
  if (static_cast<int>(real.h.size()) != spec.L) {
    throw std::invalid_argument("build_trotter_circuit: realization has " +
                                std::to_string(real.h.size()) + " fields for L=" +
                                std::to_string(spec.L));
  }

  const double delta = tau / steps;
  Circuit c(spec.L, CircuitMeta{order, steps, tau});
  if (order == 1) {
    for (int s = 0; s < steps; ++s) {
      append_ising_slice(c, spec, real, delta);
      append_transverse_slice(c, spec, delta);
    }
    return c;
  }

  if (options.merge_adjacent) {
    append_transverse_slice(c, spec, delta / 2.0);
    for (int s = 0; s < steps; ++s) {
      append_ising_slice(c, spec, real, delta);
      append_transverse_slice(c, spec, s + 1 < steps ? delta : delta / 2.0);
    }
    return c;
  }
  for (int s = 0; s < steps; ++s) {
    append_transverse_slice(c, spec, delta / 2.0);
    append_ising_slice(c, spec, real, delta);
    append_transverse_slice(c, spec, delta / 2.0);
  }
  return c;
}

Circuit transpile(const Circuit& circuit, const TranspileOptions& options) {
  const int n = circuit.num_qubits();

  WireMerger fused(n);
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::kRX && g.kind != GateKind::kRZ && g.kind != GateKind::kRZZ) {
      throw std::invalid_argument("transpile: unsupported input gate " +
                                  std::string(gate_name(g.kind)));
    }
    fused.push(g, options.fuse_rotations && is_rotation(g.kind));
  }

  constexpr double kHalfPi = std::numbers::pi / 2.0;
  WireMerger out(n);
  for (const Gate& g : fused.take()) {
    switch (g.kind) {
      case GateKind::kRZZ:
        out.push(Gate::cnot(g.targets[0], g.targets[1]), false);
        out.push(Gate::rz(g.targets[1], g.angle), options.merge_rz);
        out.push(Gate::cnot(g.targets[0], g.targets[1]), false);
        break;
      case GateKind::kRX: {
        const int q = g.targets[0];
        out.push(Gate::rz(q, kHalfPi), options.merge_rz);
        out.push(Gate::sx(q), false);
        out.push(Gate::rz(q, g.angle + std::numbers::pi), options.merge_rz);
        out.push(Gate::sx(q), false);
        out.push(Gate::rz(q, kHalfPi), options.merge_rz);
        break;
      }
      default:
        out.push(g, options.merge_rz);
        break;
    }
  }

  Circuit result(n, circuit.meta());
  for (const Gate& g : out.take()) result.append(g);
  return options.elide_zero_rz ? elide_zero_rz(result) : result;
}

Circuit elide_zero_rz(const Circuit& circuit) {
  Circuit result(circuit.num_qubits(), circuit.meta());
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::kRZ && g.angle == 0.0) continue;
    result.append(g);
  }
  return result;
}

GateCount count_gates(const ChainSpec& spec, int order, int steps) {
  check_order_steps(order, steps);
  const long L = spec.L;
  const long m = steps;
  GateCount count;
  count.single_qubit = (6 * L - 1) * m + (order == 2 ? 5 * L : 0);
  count.two_qubit = 2 * (L - 1) * m;
  return count;
}

GateCount tally(const Circuit& circuit) {
  GateCount count;
  for (const Gate& g : circuit.gates()) {
    if (g.arity() == 2) {
      ++count.two_qubit;
    } else {
      ++count.single_qubit;
    }
  }
  return count;
}

}  // namespace locprobe
