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

#include "locprobe/state.hpp"

#include <cmath>
#include <stdexcept>

namespace locprobe {

StateVector StateVector::basis(int L, BasisIndex k) {
  const auto dim = static_cast<Eigen::Index>(basis_dim(L));
  if (static_cast<Eigen::Index>(k) >= dim) {
    throw std::invalid_argument("StateVector::basis: index outside the 2^L basis");
  }
  StateVector psi;
  psi.L = L;
  psi.amp = Eigen::VectorXcd::Zero(dim);
  psi.amp(static_cast<Eigen::Index>(k)) = 1.0;
  return psi;
}

StateVector StateVector::uniform(int L) {
  const auto dim = static_cast<Eigen::Index>(basis_dim(L));
  StateVector psi;
  psi.L = L;
  psi.amp = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return psi;
}

Eigen::VectorXd probabilities(const StateVector& psi) { return psi.amp.cwiseAbs2(); }

double expectation_Mz(const StateVector& psi) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k < psi.amp.size(); ++k) {
    acc += std::norm(psi.amp(k)) *
           magnetization_eigenvalue(static_cast<BasisIndex>(k), psi.L);
  }
  return acc;
}

Complex expectation_twist(const StateVector& psi) {
  Complex acc{0.0, 0.0};
  for (Eigen::Index k = 0; k < psi.amp.size(); ++k) {
    acc += std::norm(psi.amp(k)) *
           std::polar(1.0, twist_phase(static_cast<BasisIndex>(k), psi.L));
  }
  return acc;
}

}  // namespace locprobe
