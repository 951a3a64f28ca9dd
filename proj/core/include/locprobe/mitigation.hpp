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
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "locprobe/observables.hpp"
#include "locprobe/simulator.hpp"

namespace locprobe {

// Tensor-product readout model. Qubit j is described by its two flip rates
// p(1|0) and p(0|1); the column-stochastic matrix is
//   C_j = [[1 - p(1|0), p(0|1)],
//          [p(1|0),     1 - p(0|1)]],   C_j[observed][prepared].
struct ConfusionModel {
  struct FlipRates {
    double p1_given0 = 0.0;
    double p0_given1 = 0.0;
  };
  std::vector<FlipRates> qubits;

  static ConfusionModel identity(int L);
  static ConfusionModel symmetric(int L, double p);

  int num_qubits() const { return static_cast<int>(qubits.size()); }
  Eigen::Matrix2d matrix(int qubit) const;
  // Probability of reading `observed` when `prepared` was the true outcome.
  double transition(BasisIndex observed, BasisIndex prepared) const;
  void validate() const;
};

// Per-qubit flip rates from the |0...0> and |1...1> calibration records.
ConfusionModel calibrate_from_counts(const CountsDistribution& zeros,
                                     const CountsDistribution& ones);

// Runs the two calibration circuits (identity and X on every qubit) through
// the noisy simulator. Throws std::invalid_argument if shots_per_basis < 1000.
ConfusionModel calibrate(const NoiseModel& noise, int L, long shots_per_basis,
                         std::uint64_t key, int threads = 1);

struct MitigationOptions {
  enum class Solver { kLU, kIterative };
  Solver solver = Solver::kLU;
  // Transition entries between outcomes further apart than this Hamming
  // distance are dropped. Negative means no truncation.
  int hamming_radius = -1;
  // Largest reduced subspace accepted; 0 means 2^L.
  std::size_t max_subspace = 0;
  double iterative_tolerance = 1e-12;
  int iterative_max_iterations = 1000;
};

// Readout correction restricted to the observed outcome set S: builds
// A[s][s'] = prod_j C_j[s_j][s'_j] over S, renormalizes its columns over S and
// solves A p = p_obs. The result can contain small negative entries and is
// returned as is. Throws NumericalError for a singular reduced matrix.
QuasiDistribution mitigate(const CountsDistribution& cd, const ConfusionModel& cm,
                           const MitigationOptions& options = {});

// One line per qubit: "p(1|0) p(0|1)".
void write_confusion(std::ostream& out, const ConfusionModel& cm);
ConfusionModel read_confusion(std::istream& in);

}  // namespace locprobe
