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

#include "locprobe/spin_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "locprobe/rng.hpp"

namespace locprobe {

void ChainSpec::validate() const {
  if (L < kMinSites || L > kMaxSites) {
    throw std::invalid_argument("ChainSpec: L must lie in [" + std::to_string(kMinSites) +
                                ", " + std::to_string(kMaxSites) +
                                "], got " + std::to_string(L));
  }
  if (!(J > 0.0) || !std::isfinite(J)) {
    throw std::invalid_argument("ChainSpec: J must be positive and finite");
  }
  if (!(Gamma > 0.0) || !std::isfinite(Gamma)) {
    throw std::invalid_argument("ChainSpec: Gamma must be positive and finite");
  }
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("ChainSpec: disorder strength w must be >= 0");
  }
}

DisorderRealization sample_disorder(const ChainSpec& spec, std::uint64_t master_seed,
                                    std::uint64_t index) {
  spec.validate();
  DisorderRealization real;
  real.seed = master_seed;
  real.realization_index = index;
  real.h.resize(static_cast<std::size_t>(spec.L));
  CounterRng rng(derive_key(master_seed, {index}));
  for (double& hj : real.h) hj = rng.uniform() * 2.0 * spec.w - spec.w;
  return real;
}

DisorderRealization fixed_disorder(std::vector<double> h) {
  DisorderRealization real;
  real.h = std::move(h);
  return real;
}

std::vector<double> ising_diagonal(const ChainSpec& spec, std::span<const double> h) {
  if (static_cast<int>(h.size()) != spec.L) {
    throw std::invalid_argument("ising_diagonal: expected " + std::to_string(spec.L) +
                                " local fields, got " + std::to_string(h.size()));
  }
  const BasisIndex dim = basis_dim(spec.L);
  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (BasisIndex k = 0; k < dim; ++k) {
    double e = 0.0;
    for (int j = 0; j + 1 < spec.L; ++j) e += spec.J * spin_at(k, j) * spin_at(k, j + 1);
    for (int j = 0; j < spec.L; ++j) e += h[static_cast<std::size_t>(j)] * spin_at(k, j);
    diag[static_cast<std::size_t>(k)] = e;
  }
  return diag;
}

DenseHermitian build_hamiltonian(const ChainSpec& spec, const DisorderRealization& real) {
  spec.validate();
  const auto diag = ising_diagonal(spec, real.h);
  const auto dim = static_cast<Eigen::Index>(spec.dim());

  DenseHermitian H;
  H.L = spec.L;
  H.entries = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    H.entries(k, k) = diag[static_cast<std::size_t>(k)];
    for (int j = 0; j < spec.L; ++j) {
      const Eigen::Index flipped = k ^ (Eigen::Index{1} << j);
      H.entries(k, flipped) = -spec.Gamma;
    }
  }
  return H;
}

std::vector<int> magnetization_table(int L) {
  const BasisIndex dim = basis_dim(L);
  std::vector<int> m(static_cast<std::size_t>(dim));
  for (BasisIndex k = 0; k < dim; ++k) m[k] = magnetization_eigenvalue(k, L);
  return m;
}

std::vector<double> twist_phase_table(int L) {
  const BasisIndex dim = basis_dim(L);
  std::vector<double> u(static_cast<std::size_t>(dim));
  for (BasisIndex k = 0; k < dim; ++k) u[k] = twist_phase(k, L);
  return u;
}

}  // namespace locprobe
