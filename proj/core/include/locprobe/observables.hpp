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

#include <map>

#include "locprobe/simulator.hpp"
#include "locprobe/spin_model.hpp"

namespace locprobe {

// Outcome weights that sum to one but may be slightly negative, as produced
// by measurement-error mitigation.
struct QuasiDistribution {
  int L = 0;
  std::map<BasisIndex, double> probs;
  long shots = 0;

  double total() const;
  static QuasiDistribution from_counts(const CountsDistribution& cd);
};

struct TwistEstimate {
  Complex z{0.0, 0.0};
  double z2 = 0.0;            // plug-in |z|^2
  double z2_corrected = 0.0;  // |z|^2 - (1 - |z|^2) / (shots - 1)
};

// M_z = sum_k p_k m_k. Throws std::invalid_argument for zero shots.
double mz_from_counts(const CountsDistribution& cd);
double mz_from_quasi(const QuasiDistribution& q);

// z = sum_k p_k exp(i u_k), from the same record as mz_from_counts().
TwistEstimate twist_from_counts(const CountsDistribution& cd);
TwistEstimate twist_from_quasi(const QuasiDistribution& q);

}  // namespace locprobe
