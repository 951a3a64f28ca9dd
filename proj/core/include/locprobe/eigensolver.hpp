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

#include <string>

#include <Eigen/Dense>

namespace locprobe {

enum class EigenMethod {
  kAuto,         // Jacobi up to kJacobiMaxDim, Householder tridiagonalization above.
  kJacobi,       // cyclic complex Jacobi, implemented here
  kHouseholder,  // Eigen::SelfAdjointEigenSolver
};

inline constexpr Eigen::Index kJacobiMaxDim = 256;

struct JacobiOptions {
  // Converged once ||offdiag(A)||_F <= tolerance * ||A||_F.
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

struct HermitianEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors;  // column i belongs to values(i)
  int sweeps = 0;            // Jacobi sweeps used (0 for other methods)
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Eigenpairs are sorted
// by eigenvalue with ties broken by the original column index, so degenerate
// spectra still give a deterministic ordering. Throws NumericalError when
// max_sweeps is exhausted; `context` is appended to the message.
HermitianEigen jacobi_eigh(const Eigen::MatrixXcd& matrix, const JacobiOptions& options = {},
                           const std::string& context = {});

HermitianEigen eigh(const Eigen::MatrixXcd& matrix, EigenMethod method = EigenMethod::kAuto,
                    const std::string& context = {});

}  // namespace locprobe
