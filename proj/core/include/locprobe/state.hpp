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

#include <complex>

#include <Eigen/Dense>

#include "locprobe/spin_model.hpp"

namespace locprobe {

// Complex amplitudes over the 2^L computational basis (see spin_at()).
struct StateVector {
  int L = 0;
  Eigen::VectorXcd amp;

  std::size_t dim() const { return static_cast<std::size_t>(amp.size()); }
  double norm() const { return amp.norm(); }

  static StateVector basis(int L, BasisIndex k);
  static StateVector all_up(int L) { return basis(L, 0); }
  // Equal-weight superposition of every basis state.
  static StateVector uniform(int L);
};

// |amp_k|^2 for every k.
Eigen::VectorXd probabilities(const StateVector& psi);

// <psi|S^z|psi> = sum_k |amp_k|^2 m_k.
double expectation_Mz(const StateVector& psi);

// <psi|U_twist|psi> = sum_k |amp_k|^2 exp(i u_k). |z| <= 1.
Complex expectation_twist(const StateVector& psi);

}  // namespace locprobe
