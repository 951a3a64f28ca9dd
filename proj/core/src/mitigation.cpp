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

#include "locprobe/mitigation.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "locprobe/errors.hpp"

namespace locprobe {
namespace {

bool bit_of(BasisIndex k, int j) { return (k >> j) & 1U; }

std::string shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

Eigen::VectorXd jacobi_iterate(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs,
                               const MitigationOptions& options) {
  const Eigen::VectorXd inv_diag = a.diagonal().cwiseInverse();
  Eigen::VectorXd x = rhs;
  const double rhs_norm = std::max(rhs.norm(), 1e-300);
  for (int it = 0; it < options.iterative_max_iterations; ++it) {
    const Eigen::VectorXd residual = rhs - a * x;
    if (residual.norm() <= options.iterative_tolerance * rhs_norm) return x;
    x += inv_diag.cwiseProduct(residual);
  }
  throw NumericalError("mitigate: preconditioned iteration did not converge in " +
                       std::to_string(options.iterative_max_iterations) + " iterations");
}

}  // namespace

ConfusionModel ConfusionModel::identity(int L) { return symmetric(L, 0.0); }

ConfusionModel ConfusionModel::symmetric(int L, double p) {
  ConfusionModel cm;
  cm.qubits.assign(static_cast<std::size_t>(L), FlipRates{p, p});
  cm.validate();
  return cm;
}

Eigen::Matrix2d ConfusionModel::matrix(int qubit) const {
  const auto& r = qubits.at(static_cast<std::size_t>(qubit));
  Eigen::Matrix2d c;
  c << 1.0 - r.p1_given0, r.p0_given1, r.p1_given0, 1.0 - r.p0_given1;
  return c;
}

double ConfusionModel::transition(BasisIndex observed, BasisIndex prepared) const {
  double p = 1.0;
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    const auto& r = qubits[j];
    const bool obs = bit_of(observed, static_cast<int>(j));
    const bool prep = bit_of(prepared, static_cast<int>(j));
    if (prep) {
      p *= obs ? 1.0 - r.p0_given1 : r.p0_given1;
    } else {
      p *= obs ? r.p1_given0 : 1.0 - r.p1_given0;
    }
  }
  return p;
}

void ConfusionModel::validate() const {
  for (const auto& r : qubits) {
    if (!(r.p1_given0 >= 0.0 && r.p1_given0 <= 1.0 && r.p0_given1 >= 0.0 && r.p0_given1 <= 1.0)) {
      throw std::invalid_argument("ConfusionModel: flip rates must lie in [0, 1]");
    }
  }
}

ConfusionModel calibrate_from_counts(const CountsDistribution& zeros,
                                     const CountsDistribution& ones) {
  if (zeros.shots <= 0 || ones.shots <= 0) {
    throw std::invalid_argument("calibrate: calibration records need shots");
  }
  if (zeros.L != ones.L) throw std::invalid_argument("calibrate: records disagree on L");
  ConfusionModel cm;
  cm.qubits.resize(static_cast<std::size_t>(zeros.L));
  for (int j = 0; j < zeros.L; ++j) {
    long flipped_up = 0;
    for (const auto& [k, n] : zeros.counts) {
      if (bit_of(k, j)) flipped_up += n;
    }
    long flipped_down = 0;
    for (const auto& [k, n] : ones.counts) {
      if (!bit_of(k, j)) flipped_down += n;
    }
    auto& r = cm.qubits[static_cast<std::size_t>(j)];
    r.p1_given0 = static_cast<double>(flipped_up) / static_cast<double>(zeros.shots);
    r.p0_given1 = static_cast<double>(flipped_down) / static_cast<double>(ones.shots);
  }
  return cm;
}

ConfusionModel calibrate(const NoiseModel& noise, int L, long shots_per_basis,
                         std::uint64_t key, int threads) {
  if (shots_per_basis < 1000) {
    throw std::invalid_argument("calibrate: shots_per_basis must be >= 1000, got " +
                                std::to_string(shots_per_basis));
  }
  const Circuit prep_zeros(L);
  Circuit prep_ones(L);
  for (int j = 0; j < L; ++j) prep_ones.append(Gate::x(j));
  const StateVector vacuum = StateVector::all_up(L);
  const auto zeros =
      run_noisy_counts(prep_zeros, vacuum, noise, shots_per_basis, derive_key(key, {0}), threads);
  const auto ones =
      run_noisy_counts(prep_ones, vacuum, noise, shots_per_basis, derive_key(key, {1}), threads);
  return calibrate_from_counts(zeros, ones);
}

QuasiDistribution mitigate(const CountsDistribution& cd, const ConfusionModel& cm,
                           const MitigationOptions& options) {
  if (cd.shots <= 0) throw std::invalid_argument("mitigate: empty counts");
  if (cm.num_qubits() != cd.L) {
    throw std::invalid_argument("mitigate: confusion model has " +
                                std::to_string(cm.num_qubits()) + " qubits, counts have " +
                                std::to_string(cd.L));
  }

  std::vector<BasisIndex> subset;
  std::vector<double> observed;
  for (const auto& [k, n] : cd.counts) {
    if (n == 0) continue;
    subset.push_back(k);
    observed.push_back(static_cast<double>(n) / static_cast<double>(cd.shots));
  }
  const std::size_t cap = options.max_subspace == 0
                              ? static_cast<std::size_t>(basis_dim(cd.L))
                              : options.max_subspace;
  if (subset.size() > cap) {
    throw std::invalid_argument("mitigate: reduced subspace of " + std::to_string(subset.size()) +
                                " outcomes exceeds the cap of " + std::to_string(cap));
  }

  const auto n = static_cast<Eigen::Index>(subset.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      const BasisIndex s = subset[static_cast<std::size_t>(row)];
      const BasisIndex t = subset[static_cast<std::size_t>(col)];
      const bool keep = options.hamming_radius < 0 || std::popcount(s ^ t) <= options.hamming_radius;
      a(row, col) = keep ? cm.transition(s, t) : 0.0;
    }
    const double colsum = a.col(col).sum();
    if (colsum <= 0.0) {
      throw NumericalError("mitigate: reduced assignment matrix has an empty column");
    }
    a.col(col) /= colsum;
  }
  const Eigen::Map<const Eigen::VectorXd> rhs(observed.data(), n);

  Eigen::VectorXd corrected;
  if (options.solver == MitigationOptions::Solver::kLU) {
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-13)) {
      throw NumericalError("mitigate: reduced assignment matrix is singular (rcond estimate " +
                           shortest(rcond) + ")");
    }
    corrected = lu.solve(rhs);
  } else {
    corrected = jacobi_iterate(a, rhs, options);
  }

  QuasiDistribution q;
  q.L = cd.L;
  q.shots = cd.shots;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    q.probs[subset[i]] = corrected(static_cast<Eigen::Index>(i));
  }
  return q;
}

void write_confusion(std::ostream& out, const ConfusionModel& cm) {
  out << "# p(1|0) p(0|1)\n";
  for (const auto& r : cm.qubits) out << shortest(r.p1_given0) << ' ' << shortest(r.p0_given1) << '\n';
}

ConfusionModel read_confusion(std::istream& in) {
  ConfusionModel cm;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    std::string second;
    std::string extra;
    if (!(fields >> second) || (fields >> extra)) {
      throw std::invalid_argument("confusion line " + std::to_string(line) +
                                  ": expected two flip rates");
    }
    ConfusionModel::FlipRates r;
    const auto parse = [&](const std::string& text, double& value) {
      const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
      if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("confusion line " + std::to_string(line) +
                                    ": bad number '" + text + "'");
      }
    };
    parse(first, r.p1_given0);
    parse(second, r.p0_given1);
    cm.qubits.push_back(r);
  }
  cm.validate();
  return cm;
}

}  // namespace locprobe
