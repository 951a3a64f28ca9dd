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

#include "locprobe/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "locprobe/errors.hpp"

namespace locprobe {
namespace {

using Complex = std::complex<double>;

void require_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigh: matrix is not square");
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1.0);
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) throw std::invalid_argument("eigh: matrix is not Hermitian");
}

double offdiag_norm2(const Eigen::MatrixXcd& a) {
  double acc = 0.0;
  for (Eigen::Index q = 0; q < a.cols(); ++q) {
    for (Eigen::Index p = 0; p < a.rows(); ++p) {
      if (p != q) acc += std::norm(a(p, q));
    }
  }
  return acc;
}

HermitianEigen sorted(Eigen::VectorXd values, Eigen::MatrixXcd vectors, int sweeps) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });
  HermitianEigen out;
  out.values.resize(values.size());
  out.vectors.resize(vectors.rows(), vectors.cols());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto dst = static_cast<Eigen::Index>(i);
    out.values(dst) = values(order[i]);
    out.vectors.col(dst) = vectors.col(order[i]);
  }
  out.sweeps = sweeps;
  return out;
}

// One two-sided rotation A <- G^H A G, V <- V G, with
// G = diag(1, conj(phase)) * [[c, s], [-s, c]] acting on (p, q).
void rotate(Eigen::MatrixXcd& a, Eigen::MatrixXcd& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * c + akq * gqp;
    a(k, q) = akp * s + akq * gqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(gqp) * aqk;
    a(q, k) = s * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * c + vkq * gqp;
    v(k, q) = vkp * s + vkq * gqq;
  }
}

}  // namespace

HermitianEigen jacobi_eigh(const Eigen::MatrixXcd& matrix, const JacobiOptions& options,
                           const std::string& context) {
  require_hermitian(matrix);
  const Eigen::Index n = matrix.rows();
  Eigen::MatrixXcd a = 0.5 * (matrix + matrix.adjoint());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);

  const double total = a.squaredNorm();
  const double threshold = options.tolerance * options.tolerance * total;

  int sweep = 0;
  while (offdiag_norm2(a) > threshold) {
    if (sweep >= options.max_sweeps) {
      throw NumericalError("jacobi_eigh: no convergence after " +
                           std::to_string(options.max_sweeps) + " sweeps" +
                           (context.empty() ? std::string{} : " (" + context + ")"));
    }
    ++sweep;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Entries negligible against both diagonals are dropped once the
        // early sweeps have done the bulk of the work.
        const double dp = std::abs(a(p, p).real());
        const double dq = std::abs(a(q, q).real());
        if (sweep > 4 && dp + 100.0 * r == dp && dq + 100.0 * r == dq) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  return sorted(a.diagonal().real(), std::move(v), sweep);
}

HermitianEigen eigh(const Eigen::MatrixXcd& matrix, EigenMethod method,
                    const std::string& context) {
  if (method == EigenMethod::kAuto) {
    method = matrix.rows() <= kJacobiMaxDim ? EigenMethod::kJacobi : EigenMethod::kHouseholder;
  }
  if (method == EigenMethod::kJacobi) return jacobi_eigh(matrix, {}, context);

  require_hermitian(matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigh: Householder/QR eigensolver failed" +
                         (context.empty() ? std::string{} : " (" + context + ")"));
  }
  return sorted(solver.eigenvalues(), solver.eigenvectors(), 0);
}

}  // namespace locprobe
