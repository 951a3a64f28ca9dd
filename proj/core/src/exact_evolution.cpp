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

#include "locprobe/exact_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace locprobe {
namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

// Greedy bijective assignment of basis states to eigenvector columns.
std::vector<std::size_t> assign_eigenstates(const Eigen::MatrixXd& overlap) {
  const auto n = static_cast<std::size_t>(overlap.rows());
  std::vector<std::size_t> best(n);
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::Index arg = 0;
    overlap.row(static_cast<Eigen::Index>(k)).maxCoeff(&arg);
    best[k] = static_cast<std::size_t>(arg);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return overlap(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(best[a])) >
           overlap(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(best[b]));
  });

  std::vector<std::size_t> assign(n, kUnassigned);
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> deferred;
  for (std::size_t k : order) {
    if (!taken[best[k]]) {
      assign[k] = best[k];
      taken[best[k]] = true;
    } else {
      deferred.push_back(k);
    }
  }
  for (std::size_t k : deferred) {
    double best_overlap = -1.0;
    std::size_t pick = kUnassigned;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double o = overlap(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i));
      if (o > best_overlap) {
        best_overlap = o;
        pick = i;
      }
    }
    assign[k] = pick;
    taken[pick] = true;
  }
  return assign;
}

Eigen::VectorXd magnetization_vector(int L) {
  const auto table = magnetization_table(L);
  Eigen::VectorXd m(static_cast<Eigen::Index>(table.size()));
  for (std::size_t k = 0; k < table.size(); ++k) m(static_cast<Eigen::Index>(k)) = table[k];
  return m;
}

Eigen::VectorXcd twist_vector(int L) {
  const auto table = twist_phase_table(L);
  Eigen::VectorXcd u(static_cast<Eigen::Index>(table.size()));
  for (std::size_t k = 0; k < table.size(); ++k) {
    u(static_cast<Eigen::Index>(k)) = std::polar(1.0, table[k]);
  }
  return u;
}

}  // namespace

Eigen::VectorXcd EigenSystem::column_coefficients() const {
  Eigen::VectorXcd out(c.size());
  for (std::size_t k = 0; k < assign.size(); ++k) {
    out(static_cast<Eigen::Index>(assign[k])) = c(static_cast<Eigen::Index>(k));
  }
  return out;
}

Eigen::VectorXd EigenSystem::residual_norms() const {
  return (1.0 - b.array().square()).max(0.0).sqrt().matrix();
}

EigenSystem diagonalize(const DenseHermitian& H, const StateVector& psi0,
                        const DiagonalizeOptions& options) {
  if (psi0.dim() != H.dim()) {
    throw std::invalid_argument("diagonalize: initial state dimension does not match H");
  }
  HermitianEigen eig = eigh(H.entries, options.method, options.context);

  EigenSystem es;
  es.L = H.L;
  es.sweeps = eig.sweeps;
  es.energies = std::move(eig.values);
  es.vectors = std::move(eig.vectors);

  const auto n = static_cast<std::size_t>(es.energies.size());
  es.assign = assign_eigenstates(es.vectors.cwiseAbs2());
  es.basis_of.assign(n, 0);
  es.b.resize(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = static_cast<Eigen::Index>(es.assign[k]);
    es.basis_of[es.assign[k]] = k;
    const Complex overlap = es.vectors(static_cast<Eigen::Index>(k), col);
    const double mag = std::abs(overlap);
    if (mag > 0.0) {
      es.vectors.col(col) *= std::conj(overlap) / mag;
      es.vectors(static_cast<Eigen::Index>(k), col) = mag;
    }
    es.b(static_cast<Eigen::Index>(k)) = mag;
  }

  const Eigen::VectorXcd by_column = es.vectors.adjoint() * psi0.amp;
  es.c.resize(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    es.c(static_cast<Eigen::Index>(k)) = by_column(static_cast<Eigen::Index>(es.assign[k]));
  }
  return es;
}

namespace {

StateVector evolve_columns(const EigenSystem& es, const Eigen::VectorXcd& coeffs, double t) {
  Eigen::VectorXcd phased(coeffs.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    phased(i) = coeffs(i) * std::polar(1.0, -es.energies(i) * t);
  }
  StateVector psi;
  psi.L = es.L;
  psi.amp = es.vectors * phased;
  return psi;
}

}  // namespace

StateVector evolve_exact(const EigenSystem& es, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolve_exact: t must be finite");
  return evolve_columns(es, es.column_coefficients(), t);
}

StateVector evolve_exact(const EigenSystem& es, const StateVector& psi0, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolve_exact: t must be finite");
  if (psi0.dim() != es.dim()) {
    throw std::invalid_argument("evolve_exact: initial state dimension mismatch");
  }
  return evolve_columns(es, es.vectors.adjoint() * psi0.amp, t);
}

Eigen::VectorXcd twist_diagonal(const EigenSystem& es) {
  const Eigen::VectorXcd phases = twist_vector(es.L);
  const Eigen::MatrixXd weights = es.vectors.cwiseAbs2();
  return weights.transpose().cast<Complex>() * phases;
}

std::pair<std::size_t, std::size_t> central_window(std::size_t dim, std::size_t window) {
  if (window == 0 || window > dim) {
    throw std::invalid_argument("central_window: window must lie in [1, dim]");
  }
  const std::size_t first = dim / 2 - std::min(dim / 2, window / 2);
  return {first, first + window};
}

double eigenstate_twist_overlap(const EigenSystem& es, std::size_t window) {
  const auto [first, last] = central_window(es.dim(), window);
  const Eigen::VectorXcd diag = twist_diagonal(es);
  double acc = 0.0;
  for (std::size_t i = first; i < last; ++i) acc += std::norm(diag(static_cast<Eigen::Index>(i)));
  return acc / static_cast<double>(window);
}

double eigenstate_b4_average(const EigenSystem& es, std::size_t window) {
  const auto [first, last] = central_window(es.dim(), window);
  double acc = 0.0;
  for (std::size_t i = first; i < last; ++i) {
    const double bk = es.b(static_cast<Eigen::Index>(es.basis_of[i]));
    acc += bk * bk * bk * bk;
  }
  return acc / static_cast<double>(window);
}

AnalysisSeries analysis_series(const EigenSystem& es, std::span<const double> times) {
  const auto n = static_cast<Eigen::Index>(es.dim());
  const Eigen::VectorXd m = magnetization_vector(es.L);
  const Eigen::VectorXcd twist = twist_vector(es.L);
  const auto u = twist_phase_table(es.L);

  // Operators in the eigenbasis (column order).
  const Eigen::MatrixXcd sz_eig =
      es.vectors.adjoint() * (m.cast<Complex>().asDiagonal() * es.vectors);
  const Eigen::MatrixXcd twist_eig = es.vectors.adjoint() * (twist.asDiagonal() * es.vectors);
  const Eigen::VectorXcd c_col = es.column_coefficients();

  // Per-basis-label quantities.
  Eigen::VectorXd energy(n);
  Eigen::VectorXd c_abs2(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    energy(k) = es.energy_of(static_cast<BasisIndex>(k));
    c_abs2(k) = std::norm(es.c(k));
  }
  Eigen::MatrixXd a_abs(n, n);
  Eigen::MatrixXd a_arg(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const Complex a_kl = es.c(k) * std::conj(es.c(l)) * es.b(k);
      a_abs(k, l) = std::abs(a_kl);
      a_arg(k, l) = std::atan2(a_kl.imag(), a_kl.real());
    }
  }

  AnalysisSeries out;
  out.times.assign(times.begin(), times.end());
  for (Eigen::Index k = 0; k < n; ++k) {
    const double b2 = es.b(k) * es.b(k);
    out.Mz_avg += c_abs2(k) * b2 * m(k);
    out.z2_avg += c_abs2(k) * c_abs2(k) * b2 * b2;
    out.z0 += c_abs2(k) * twist_eig(static_cast<Eigen::Index>(es.assign[static_cast<std::size_t>(k)]),
                                    static_cast<Eigen::Index>(es.assign[static_cast<std::size_t>(k)]));
  }
  const double z0_abs = std::abs(out.z0);
  const double beta0 = std::atan2(out.z0.imag(), out.z0.real());

  const std::size_t nt = times.size();
  for (auto* series : {&out.Mz_exact, &out.z2_exact, &out.Mz_approx, &out.z2_approx,
                       &out.f_mg, &out.f_tw}) {
    series->resize(nt);
  }

  Eigen::VectorXcd a(n);
  Eigen::VectorXd g(n);
  for (std::size_t ti = 0; ti < nt; ++ti) {
    const double t = times[ti];
    for (Eigen::Index i = 0; i < n; ++i) a(i) = c_col(i) * std::polar(1.0, -es.energies(i) * t);
    out.Mz_exact[ti] = a.dot(sz_eig * a).real();
    out.z2_exact[ti] = std::norm(a.dot(twist_eig * a));

    for (Eigen::Index k = 0; k < n; ++k) {
      double acc = 0.0;
      for (Eigen::Index l = 0; l < n; ++l) {
        if (l == k) continue;
        acc += a_abs(k, l) * std::cos((energy(k) - energy(l)) * t - a_arg(k, l));
      }
      g(k) = acc;
    }

    double f_mg = 0.0;
    double tw = 0.0;
    Complex phase_sum{0.0, 0.0};
    for (Eigen::Index k = 0; k < n; ++k) {
      f_mg += m(k) * g(k);
      tw += std::cos(u[static_cast<std::size_t>(k)] - beta0) * g(k);
      phase_sum += twist(k) * g(k);
    }
    out.f_mg[ti] = 2.0 * f_mg;
    out.f_tw[ti] = 4.0 * z0_abs * tw;
    out.Mz_approx[ti] = out.Mz_avg + out.f_mg[ti];
    out.z2_approx[ti] = z0_abs * z0_abs + out.f_tw[ti] + std::norm(phase_sum);
  }
  return out;
}

}  // namespace locprobe
