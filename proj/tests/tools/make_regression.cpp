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

// Writes the pinned exact-sweep statistics used by the regression test and
// the acceptance suite. Evolution goes through the Kronecker Hamiltonian and
// the Taylor-series exponential, not through the library's eigensolver; only
// the disorder stream is shared so both sides see the same realizations.
//
//   make_regression > tests/data/exact_sweep_regression.csv

#include <charconv>
#include <cmath>
#include <complex>
#include <iostream>

#include "locprobe/experiments.hpp"
#include "oracles.hpp"

namespace {

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

int main() {
  constexpr int L = 5;
  constexpr long n = 500;
  constexpr std::uint64_t seed = 12345;
  constexpr double t = 1.5;
  const std::vector<double> grid = locprobe::SweepConfig{}.w_grid;

  const Eigen::MatrixXcd sz = oracle::total_sz(L);
  const Eigen::MatrixXcd tw = oracle::twist_operator(L);
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(1 << L);
  psi0(0) = 1.0;

  std::cout << "w,mean_mz,std_mz,mean_z2,std_z2\n";
  for (std::size_t wi = 0; wi < grid.size(); ++wi) {
    const locprobe::ChainSpec spec{L, 1.0, 1.0, grid[wi]};
    double s_mz = 0, s_mz2 = 0, s_z2 = 0, s_z22 = 0;
    for (long i = 0; i < n; ++i) {
      const auto real = locprobe::sweep_realization(spec, seed, wi, static_cast<std::uint64_t>(i));
      const Eigen::MatrixXcd H = oracle::hamiltonian(L, 1.0, 1.0, real.h);
      const Eigen::VectorXcd psi = oracle::expm(std::complex<double>(0, -t) * H) * psi0;
      const double mz = psi.dot(sz * psi).real();
      const double z2 = std::norm(psi.dot(tw * psi));
      s_mz += mz;
      s_mz2 += mz * mz;
      s_z2 += z2;
      s_z22 += z2 * z2;
    }
    const double mean_mz = s_mz / n;
    const double mean_z2 = s_z2 / n;
    std::cout << fmt(grid[wi]) << ',' << fmt(mean_mz) << ','
              << fmt(std::sqrt(std::max(0.0, s_mz2 / n - mean_mz * mean_mz))) << ','
              << fmt(mean_z2) << ','
              << fmt(std::sqrt(std::max(0.0, s_z22 / n - mean_z2 * mean_z2))) << '\n';
  }
  return 0;
}
