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

#include <bit>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace locprobe {

using Complex = std::complex<double>;
using BasisIndex = std::uint64_t;

inline constexpr int kMinSites = 2;
inline constexpr int kMaxSites = 14;

// Basis convention used throughout the library.
//
// A computational-basis index k in [0, 2^L) encodes one spin per site: bit j of
// k (bit 0 = site 1, bit L-1 = site L) is 0 for spin up (s = +1) and 1 for spin
// down (s = -1). k = 0 is therefore the all-up state, and a measured qubit
// reading 0 is spin up.
constexpr int spin_at(BasisIndex k, int site) noexcept {
  return ((k >> site) & 1U) ? -1 : +1;
}

constexpr BasisIndex basis_dim(int sites) noexcept { return BasisIndex{1} << sites; }

// Disordered transverse-field Ising chain with open boundaries:
//   H = sum_j J sz_j sz_{j+1} + sum_j h_j sz_j - Gamma sum_j sx_j.
struct ChainSpec {
  int L = 5;
  double J = 1.0;
  double Gamma = 1.0;
  double w = 0.0;

  // Throws std::invalid_argument if any field is out of range.
  void validate() const;

  std::size_t dim() const { return static_cast<std::size_t>(basis_dim(L)); }
};

struct DisorderRealization {
  std::vector<double> h;
  std::uint64_t seed = 0;
  std::uint64_t realization_index = 0;
};

// h_j i.i.d. uniform on [-w, w], drawn from the counter stream keyed by
// derive_key(master_seed, {index}). Same inputs give bit-identical fields.
DisorderRealization sample_disorder(const ChainSpec& spec, std::uint64_t master_seed,
                                    std::uint64_t index);

// Realization with explicitly supplied fields (seed/index zero).
DisorderRealization fixed_disorder(std::vector<double> h);

// Dense Hermitian operator in the computational basis.
struct DenseHermitian {
  int L = 0;
  Eigen::MatrixXcd entries;

  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

// Builds H_I + H_TF in the basis convention above. The Ising part sits on the
// diagonal; each sx_j contributes -Gamma between indices differing in bit j.
DenseHermitian build_hamiltonian(const ChainSpec& spec, const DisorderRealization& real);

// Diagonal of the Ising part only (J and h terms).
std::vector<double> ising_diagonal(const ChainSpec& spec, std::span<const double> h);

// m_k = sum_j s_j = L - 2 popcount(k).
constexpr int magnetization_eigenvalue(BasisIndex k, int L) noexcept {
  return L - 2 * std::popcount(k);
}

// u_k = (pi/L) sum_{j=1..L} j s_j, the phase picked up by |k> under the twist
// operator exp(i sum_j theta_j sz_j / 2) with theta_j = 2 pi j / L.
constexpr double twist_phase(BasisIndex k, int L) noexcept {
  long weighted = 0;
  for (int j = 0; j < L; ++j) weighted += static_cast<long>(j + 1) * spin_at(k, j);
  return std::numbers::pi * static_cast<double>(weighted) / static_cast<double>(L);
}

// Tables of m_k and u_k over the full basis.
std::vector<int> magnetization_table(int L);
std::vector<double> twist_phase_table(int L);

}  // namespace locprobe
