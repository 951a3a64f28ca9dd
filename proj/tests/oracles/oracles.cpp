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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, cd(0, -1), cd(0, 1), 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd on_site(const Eigen::MatrixXcd& op, int j, int L) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  // Most significant factor first: site L-1 ... site 0.
  for (int site = L - 1; site >= 0; --site) {
    out = kron(out, site == j ? op : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
  }
  return out;
}

Eigen::MatrixXcd hamiltonian(int L, double J, double Gamma, const std::vector<double>& h) {
  const auto dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j + 1 < L; ++j) {
    H += J * on_site(pauli_z(), j, L) * on_site(pauli_z(), j + 1, L);
  }
  for (int j = 0; j < L; ++j) {
    H += h[static_cast<std::size_t>(j)] * on_site(pauli_z(), j, L);
    H -= Gamma * on_site(pauli_x(), j, L);
  }
  return H;
}

Eigen::MatrixXcd total_sz(int L) {
  const auto dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < L; ++j) s += on_site(pauli_z(), j, L);
  return s;
}

Eigen::MatrixXcd twist_operator(int L) {
  // U = prod_j exp(i theta_j sigma^z_j / 2), theta_j = 2 pi j / L, j = 1..L.
  const auto dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (int j = 0; j < L; ++j) {
    const double theta = 2.0 * std::numbers::pi * (j + 1) / L;
    Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
    r(0, 0) = std::polar(1.0, theta / 2.0);
    r(1, 1) = std::polar(1.0, -theta / 2.0);
    u = u * on_site(r, j, L);
  }
  return u;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  while (norm / std::ldexp(1.0, s) > 0.25) ++s;
  const Eigen::MatrixXcd x = a / std::ldexp(1.0, s);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd sum = term;
  for (int n = 1; n <= 30; ++n) {
    term = term * x / static_cast<double>(n);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

std::vector<double> charpoly_eigenvalues_4x4(const Eigen::Matrix4cd& m) {
  // Faddeev-LeVerrier: p(x) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
  std::vector<cd> c(5);
  c[4] = 1.0;
  Eigen::Matrix4cd mk = Eigen::Matrix4cd::Zero();
  for (int k = 1; k <= 4; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(5 - k)] * Eigen::Matrix4cd::Identity();
    c[static_cast<std::size_t>(4 - k)] = -(m * mk).trace() / static_cast<double>(k);
  }
  const auto poly = [&](cd x) { return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0]; };

  std::vector<cd> roots{cd(0.4, 0.9), cd(0.4, 0.9) * cd(0.4, 0.9),
                        std::pow(cd(0.4, 0.9), 3), std::pow(cd(0.4, 0.9), 4)};
  for (int it = 0; it < 2000; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      cd denom = 1.0;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const cd step = poly(roots[i]) / denom;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  std::vector<double> out;
  for (const auto& r : roots) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Eigen::Matrix2cd single_qubit(const locprobe::Gate& g) {
  using locprobe::GateKind;
  const cd i(0, 1);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  switch (g.kind) {
    case GateKind::kRX:
      return std::cos(g.angle / 2) * id - i * std::sin(g.angle / 2) * pauli_x();
    case GateKind::kRZ:
      return std::cos(g.angle / 2) * id - i * std::sin(g.angle / 2) * pauli_z();
    case GateKind::kSX: {
      Eigen::Matrix2cd m;
      m << cd(0.5, 0.5), cd(0.5, -0.5), cd(0.5, -0.5), cd(0.5, 0.5);
      return m;
    }
    case GateKind::kX:
      return pauli_x();
    default:
      throw std::logic_error("single_qubit: not a one-qubit gate");
  }
}

}  // namespace

Eigen::MatrixXcd circuit_unitary(const locprobe::Circuit& c) {
  using locprobe::GateKind;
  const int L = c.num_qubits();
  const auto dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : c.gates()) {
    Eigen::MatrixXcd gm;
    if (g.kind == GateKind::kRZZ) {
      const Eigen::MatrixXcd zz = on_site(pauli_z(), g.targets[0], L) * on_site(pauli_z(), g.targets[1], L);
      gm = std::cos(g.angle / 2) * id - cd(0, 1) * std::sin(g.angle / 2) * zz;
    } else if (g.kind == GateKind::kCNOT) {
      Eigen::Matrix2cd p0 = Eigen::Matrix2cd::Zero();
      Eigen::Matrix2cd p1 = Eigen::Matrix2cd::Zero();
      p0(0, 0) = 1;
      p1(1, 1) = 1;
      gm = on_site(p0, g.targets[0], L) +
           on_site(p1, g.targets[0], L) * on_site(pauli_x(), g.targets[1], L);
    } else {
      gm = on_site(single_qubit(g), g.targets[0], L);
    }
    u = gm * u;
  }
  return u;
}

double distance_up_to_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  // Phase from the overlap trace; exact for matrices equal up to phase.
  const cd overlap = (v.adjoint() * u).trace();
  const cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd(1.0);
  return (u - phase * v).cwiseAbs().maxCoeff();
}

}  // namespace oracle
