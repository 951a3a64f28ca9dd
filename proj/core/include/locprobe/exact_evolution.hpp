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

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "locprobe/eigensolver.hpp"
#include "locprobe/spin_model.hpp"
#include "locprobe/state.hpp"

namespace locprobe {

// Eigendecomposition of H together with the basis-state <-> eigenstate
// assignment used by the localized-regime analysis.
//
// Columns of `vectors` are ordered by ascending energy. Every quantity indexed
// by a basis label k refers to the eigenstate assigned to |k>:
//   b(k) = <k|phi_k>   (real, >= 0 by the phase gauge)
//   c(k) = <phi_k|psi0>
struct EigenSystem {
  int L = 0;
  Eigen::VectorXd energies;
  Eigen::MatrixXcd vectors;
  std::vector<std::size_t> assign;    // basis k -> column
  std::vector<BasisIndex> basis_of;   // column -> basis k
  Eigen::VectorXd b;
  Eigen::VectorXcd c;
  int sweeps = 0;

  std::size_t dim() const { return static_cast<std::size_t>(energies.size()); }
  double energy_of(BasisIndex k) const { return energies(static_cast<Eigen::Index>(assign[k])); }
  // c expressed per column instead of per basis label.
  Eigen::VectorXcd column_coefficients() const;
  // ||alpha_k|| = sqrt(1 - |b_k|^2), the weight of phi_k outside |k>.
  Eigen::VectorXd residual_norms() const;
  double min_b2() const { return b.cwiseAbs2().minCoeff(); }
};

struct DiagonalizeOptions {
  EigenMethod method = EigenMethod::kAuto;
  // Attached to NumericalError messages (e.g. "seed=..., index=...").
  std::string context;
};

// Diagonalizes H, assigns each basis state its eigenstate, fixes the phase of
// every eigenvector so that b_k >= 0, and projects psi0 onto the eigenbasis.
//
// Assignment: basis states are visited in descending order of their best
// overlap |<k|phi_i>|^2 and take their argmax eigenvector if still free;
// leftovers take their best unassigned eigenvector. The result is a bijection.
EigenSystem diagonalize(const DenseHermitian& H, const StateVector& psi0,
                        const DiagonalizeOptions& options = {});

// sum_k c_k exp(-i E_k t) |phi_k> with c taken from the eigensystem.
StateVector evolve_exact(const EigenSystem& es, double t);
// Same, projecting an arbitrary initial state first.
StateVector evolve_exact(const EigenSystem& es, const StateVector& psi0, double t);

// <phi_i|U_twist|phi_i> for every column i.
Eigen::VectorXcd twist_diagonal(const EigenSystem& es);

// Sorted-energy positions [dim/2 - window/2, dim/2 - window/2 + window).
std::pair<std::size_t, std::size_t> central_window(std::size_t dim, std::size_t window);

// |z_e|^2: mean of |<phi|U_twist|phi>|^2 over `window` eigenstates at the
// centre of the spectrum.
double eigenstate_twist_overlap(const EigenSystem& es, std::size_t window = 16);

// Mean of b^4 over the same central window (the localized-regime estimate of
// |z_e|^2).
double eigenstate_b4_average(const EigenSystem& es, std::size_t window = 16);

struct AnalysisSeries {
  std::vector<double> times;
  // Full eigen-expansion (diagonal plus cross terms).
  std::vector<double> Mz_exact;
  std::vector<double> z2_exact;
  // Localized-regime approximations built from g_k(t).
  std::vector<double> Mz_approx;
  std::vector<double> z2_approx;
  std::vector<double> f_mg;
  std::vector<double> f_tw;
  // Long-time averages sum_k |c_k b_k|^2 m_k and sum_k |c_k|^4 b_k^4.
  double Mz_avg = 0.0;
  double z2_avg = 0.0;
  Complex z0{0.0, 0.0};
};

// Evaluates every series on `times`. The approximations use
//   A_kl = c_k c_l^* b_k,  g_k(t) = sum_{l != k} |A_kl| cos((E_k - E_l) t - arg A_kl).
AnalysisSeries analysis_series(const EigenSystem& es, std::span<const double> times);

}  // namespace locprobe
