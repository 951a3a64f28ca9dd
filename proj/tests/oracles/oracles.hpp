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

// Reference implementations used only by the tests. They deliberately take
// the slow, obvious route (Kronecker products, Taylor series, polynomial
// roots) and share no code with the library beyond plain Eigen types.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "locprobe/circuit.hpp"

namespace oracle {

using cd = std::complex<double>;

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// `op` on site j (0-based) of an L-site chain. Site 0 is the least
// significant factor, i.e. bit 0 of the basis index.
Eigen::MatrixXcd on_site(const Eigen::MatrixXcd& op, int j, int L);

// J sum zz + sum h_j z - Gamma sum x, built term by term.
Eigen::MatrixXcd hamiltonian(int L, double J, double Gamma, const std::vector<double>& h);

// Total sigma^z and the twist operator as dense matrices.
Eigen::MatrixXcd total_sz(int L);
Eigen::MatrixXcd twist_operator(int L);

// exp(A) by scaling and squaring around a truncated Taylor series.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

// Roots of det(lambda I - M) for a 4x4 matrix: Faddeev-LeVerrier
// coefficients, Durand-Kerner iteration, sorted real parts.
std::vector<double> charpoly_eigenvalues_4x4(const Eigen::Matrix4cd& m);

// Dense unitary of a circuit, one Kronecker-expanded matrix per gate.
Eigen::MatrixXcd circuit_unitary(const locprobe::Circuit& c);

// min over phases of max |U - e^{i phi} V|.
double distance_up_to_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

}  // namespace oracle
