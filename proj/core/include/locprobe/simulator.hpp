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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "locprobe/circuit.hpp"
#include "locprobe/rng.hpp"
#include "locprobe/state.hpp"

namespace locprobe {

// Parametric noise for emulating a device.
//
// Gate errors: after each gate, with the gate-class probability, a uniformly
// random non-identity Pauli is applied to the gate's qubit(s) (3 choices for
// single-qubit gates, 15 for CNOT). Readout: each measured bit is flipped
// independently, 0->1 with p_readout and 1->0 with p_readout_1to0 (defaults to
// p_readout, i.e. symmetric).
//
// The defaults sit roughly ten times above the device gate errors quoted for
// the hardware being emulated so that noise-induced suppression is visible at
// L=5 and m=10..15.
struct NoiseModel {
  double p_cnot = 1e-2;
  double p_1q = 1e-3;
  double p_readout = 2e-2;
  std::optional<double> p_readout_1to0;

  static NoiseModel ideal() { return {0.0, 0.0, 0.0, std::nullopt}; }
  static NoiseModel readout_only(double p) { return {0.0, 0.0, p, std::nullopt}; }

  double flip_0to1() const { return p_readout; }
  double flip_1to0() const { return p_readout_1to0.value_or(p_readout); }
  bool gate_noise_free() const { return p_cnot == 0.0 && p_1q == 0.0; }
  // Throws std::invalid_argument unless every probability lies in [0, 1].
  void validate() const;
};

// Measurement record: outcome index (see spin_at()) -> count.
struct CountsDistribution {
  int L = 0;
  std::map<BasisIndex, long> counts;
  long shots = 0;

  void add(BasisIndex outcome, long n = 1);
  double probability(BasisIndex outcome) const;
  // Throws std::invalid_argument if counts do not sum to shots or an outcome
  // does not fit in L bits.
  void validate() const;
};

// Gate kernels, exposed for tests and benchmarks.
void apply_gate(StateVector& psi, const Gate& gate);

enum class Pauli { kI = 0, kX = 1, kY = 2, kZ = 3 };
void apply_pauli(StateVector& psi, int qubit, Pauli p);

StateVector run_ideal(const Circuit& circuit, const StateVector& psi0);

// Draws `shots` i.i.d. outcomes from |amp_k|^2.
CountsDistribution sample_counts(const StateVector& psi, long shots, CounterRng& rng);

// One noisy shot: gate-error insertion, projective measurement, readout flips.
// Expects a transpiled circuit but accepts any gate kind; RZZ counts as a
// two-qubit gate for the purposes of the error probability.
BasisIndex run_noisy_trajectory(const Circuit& circuit, const StateVector& psi0,
                                const NoiseModel& noise, CounterRng& rng);

// `shots` independent trajectories; shot s uses the stream derive_key(key, {s}),
// so the result does not depend on `threads`.
CountsDistribution run_noisy_counts(const Circuit& circuit, const StateVector& psi0,
                                    const NoiseModel& noise, long shots, std::uint64_t key,
                                    int threads = 1);

// L-bit outcome string, bit 0 rightmost.
std::string format_bitstring(BasisIndex k, int L);
BasisIndex parse_bitstring(const std::string& bits);

// Text form: "# L=<L> shots=<shots>" header, then `bitstring count` lines in
// ascending outcome order.
void write_counts(std::ostream& out, const CountsDistribution& cd);
CountsDistribution read_counts(std::istream& in);

}  // namespace locprobe
