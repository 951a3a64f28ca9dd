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

#include "locprobe/circuit.hpp"
#include "locprobe/spin_model.hpp"

namespace locprobe {

struct TrotterOptions {
  // Second order only: fold the closing H_TF half-slice of each step into the
  // opening half-slice of the next one.
  bool merge_adjacent = false;
};

// Product-formula circuit for exp(-i H tau) with delta = tau / steps.
//
// Angle conventions (RX/RZ/RZZ(theta) = exp(-i theta/2 P)):
//   exp(-i J delta sz_j sz_{j+1})  -> RZZ_{j,j+1}(2 J delta)
//   exp(-i h_j delta sz_j)         -> RZ_j(2 h_j delta)
//   exp(+i Gamma delta sx_j)       -> RX_j(-2 Gamma delta)
//
// Gates are listed in time order. Order 1 emits per step the bonds, then the
// fields, then the transverse slice. Order 2 emits the symmetric sandwich
// RX(half) | bonds, fields | RX(half). Zero-angle RZ gates are kept.
Circuit build_trotter_circuit(const ChainSpec& spec, const DisorderRealization& real,
                              double tau, int order, int steps,
                              const TrotterOptions& options = {});

struct TranspileOptions {
  // Merge adjacent same-axis rotations on a wire (RX.RX, RZ.RZ) before
  // translation.
  bool fuse_rotations = true;
  // Merge adjacent RZ on a wire after translation.
  bool merge_rz = true;
  // Drop RZ(0). Off by default so gate tallies match count_gates().
  bool elide_zero_rz = false;
};

// Rewrites RX/RZ/RZZ into the {CNOT, RZ, SX, X} basis:
//   RZZ_{a,b}(t) -> CNOT_{a,b} RZ_b(t) CNOT_{a,b}            (exact)
//   RX(t)        -> RZ(pi/2) SX RZ(t + pi) SX RZ(pi/2)         (up to global phase)
// A lone RX costs five basis gates; inside Trotter circuits its outer RZs merge
// with neighbouring field rotations, leaving four per RX.
// Throws std::invalid_argument for inputs that already contain basis-only gates.
Circuit transpile(const Circuit& circuit, const TranspileOptions& options = {});

// Removes RZ gates whose angle is exactly zero.
Circuit elide_zero_rz(const Circuit& circuit);

struct GateCount {
  long single_qubit = 0;
  long two_qubit = 0;

  friend bool operator==(const GateCount&, const GateCount&) = default;
};

// Closed-form count of the transpiled Trotter circuit:
//   single = (6L - 1) m            (order 1)
//   single = (6L - 1) m + 5L       (order 2)
//   two    = 2 (L - 1) m
GateCount count_gates(const ChainSpec& spec, int order, int steps);

// Tally of an actual circuit's gate list.
GateCount tally(const Circuit& circuit);

}  // namespace locprobe
