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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "locprobe/exact_evolution.hpp"
#include "locprobe/rng.hpp"
#include "locprobe/spin_model.hpp"
#include "locprobe/state.hpp"
#include "oracles.hpp"

namespace locprobe {
namespace {

using std::numbers::pi;

TEST(CounterRng, DeriveKeyComposesAlongThePath) {
  EXPECT_EQ(derive_key(42, {3, 9}), derive_key(derive_key(42, {3}), {9}));
  EXPECT_NE(derive_key(42, {3, 9}), derive_key(42, {9, 3}));
}

TEST(CounterRng, RandomAccessMatchesSequentialDraws) {
  CounterRng a(77);
  const CounterRng b(77);
  for (std::uint64_t n = 0; n < 5; ++n) EXPECT_EQ(a(), b.at(n));
}

TEST(ChainSpec, RejectsOutOfRangeParameters) {
  EXPECT_THROW((ChainSpec{1, 1, 1, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((ChainSpec{15, 1, 1, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((ChainSpec{4, 0, 1, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((ChainSpec{4, 1, -1, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((ChainSpec{4, 1, 1, -0.5}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((ChainSpec{14, 1, 1, 3}.validate()));
}

TEST(SampleDisorder, ZeroWidthGivesZeroFields) {
  const auto real = sample_disorder({5, 1, 1, 0}, 123, 4);
  for (double h : real.h) EXPECT_EQ(h, 0.0);
}

TEST(SampleDisorder, SameKeyReproducesBitExactly) {
  const ChainSpec spec{5, 1, 1, 10};
  const auto a = sample_disorder(spec, 99, 7);
  const auto b = sample_disorder(spec, 99, 7);
  EXPECT_EQ(a.h, b.h);
  EXPECT_EQ(a.realization_index, 7u);
  EXPECT_NE(a.h, sample_disorder(spec, 99, 8).h);
}

TEST(SampleDisorder, FieldsStayInsideTheInterval) {
  const ChainSpec spec{6, 1, 1, 2.5};
  for (std::uint64_t i = 0; i < 2000; ++i) {
    for (double h : sample_disorder(spec, 5, i).h) {
      EXPECT_LE(std::abs(h), 2.5);
    }
  }
}

TEST(SampleDisorder, UniformMomentsAtUnitWidth) {
  const ChainSpec spec{2, 1, 1, 1};
  const int n = 100000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double h = sample_disorder(spec, 2024, static_cast<std::uint64_t>(i)).h[0];
    sum += h;
    sum2 += h * h;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  EXPECT_NEAR(mean, 0.0, 0.02);
  EXPECT_NEAR(var, 1.0 / 3.0, 0.05 / 3.0);
}

TEST(BuildHamiltonian, TwoSiteMatrixByHand) {
  const auto H = build_hamiltonian({2, 1, 1, 0}, fixed_disorder({0, 0}));
  Eigen::Matrix4d expected;
  expected << 1, -1, -1, 0, -1, -1, 0, -1, -1, 0, -1, -1, 0, -1, -1, 1;
  EXPECT_EQ(H.entries.real(), Eigen::MatrixXd(expected));
  EXPECT_TRUE(H.entries.imag().isZero(0.0));
}

TEST(BuildHamiltonian, ZeroTransverseFieldIsDiagonalIsing) {
  const std::vector<double> h{0.3, -1.1, 0.7};
  ChainSpec spec{3, 0.8, 1, 2};
  spec.Gamma = 1e-300;  // validate() insists on Gamma > 0
  const auto H = build_hamiltonian(spec, fixed_disorder(h));
  for (BasisIndex k = 0; k < 8; ++k) {
    double diag = 0.0;
    for (int j = 0; j < 3; ++j) {
      diag += h[static_cast<std::size_t>(j)] * spin_at(k, j);
      if (j + 1 < 3) diag += 0.8 * spin_at(k, j) * spin_at(k, j + 1);
    }
    EXPECT_DOUBLE_EQ(H.entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real(),
                     diag);
  }
  const auto ising = ising_diagonal(spec, h);
  for (BasisIndex k = 0; k < 8; ++k) {
    EXPECT_DOUBLE_EQ(ising[k], H.entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real());
  }
}

TEST(BuildHamiltonian, MatchesKroneckerConstruction) {
  const std::vector<double> h{0.5, -0.2, 0.1};
  const auto H = build_hamiltonian({3, 1, 1, 1}, fixed_disorder(h));
  const Eigen::MatrixXcd ref = oracle::hamiltonian(3, 1.0, 1.0, h);
  EXPECT_LT((H.entries - ref).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BuildHamiltonian, MatchesKroneckerConstructionOnRandomChains) {
  for (int L = 2; L <= 5; ++L) {
    const ChainSpec spec{L, 0.7, 1.3, 4};
    const auto real = sample_disorder(spec, 11, static_cast<std::uint64_t>(L));
    const auto H = build_hamiltonian(spec, real);
    EXPECT_LT((H.entries - oracle::hamiltonian(L, 0.7, 1.3, real.h)).cwiseAbs().maxCoeff(), 1e-13)
        << "L=" << L;
  }
}

TEST(BuildHamiltonian, ExactlyHermitianAndTraceless) {
  const ChainSpec spec{6, 1, 1, 8};
  for (std::uint64_t i = 0; i < 5; ++i) {
    const auto H = build_hamiltonian(spec, sample_disorder(spec, 3, i));
    EXPECT_TRUE(H.entries == H.entries.adjoint());
    EXPECT_LT(std::abs(H.entries.trace()), 1e-12 * 64);
  }
}

TEST(BuildHamiltonian, RejectsFieldCountMismatch) {
  EXPECT_THROW(build_hamiltonian({3, 1, 1, 1}, fixed_disorder({0.1, 0.2})), std::invalid_argument);
}

TEST(Magnetization, Examples) {
  EXPECT_EQ(magnetization_eigenvalue(0, 5), 5);
  EXPECT_EQ(magnetization_eigenvalue(0b10101, 5), -1);
  int total = 0;
  for (BasisIndex k = 0; k < 32; ++k) total += magnetization_eigenvalue(k, 5);
  EXPECT_EQ(total, 0);
}

TEST(TwistPhase, Examples) {
  EXPECT_NEAR(twist_phase(0, 5), 3 * pi, 1e-14);
  EXPECT_NEAR(twist_phase(0b10000, 5), pi, 1e-14);
  EXPECT_NEAR(twist_phase(0b1111, 4), -5 * pi / 2, 1e-14);
}

TEST(TwistPhase, AllUpValueForEveryLength) {
  for (int L = kMinSites; L <= kMaxSites; ++L) {
    EXPECT_EQ(magnetization_eigenvalue(0, L), L);
    EXPECT_NEAR(twist_phase(0, L), pi / L * L * (L + 1) / 2.0, 1e-12);
  }
}

TEST(SpinFlipSymmetry, ComplementNegatesBothPhases) {
  for (int L = 2; L <= 8; ++L) {
    const BasisIndex mask = basis_dim(L) - 1;
    for (BasisIndex k = 0; k <= mask; ++k) {
      EXPECT_EQ(magnetization_eigenvalue(~k & mask, L), -magnetization_eigenvalue(k, L));
      EXPECT_NEAR(twist_phase(~k & mask, L), -twist_phase(k, L), 1e-12);
    }
  }
}

TEST(DiagonalOperators, TablesAgreeWithDenseOperators) {
  const int L = 4;
  const Eigen::MatrixXcd sz = oracle::total_sz(L);
  const Eigen::MatrixXcd tw = oracle::twist_operator(L);
  const auto m = magnetization_table(L);
  const auto u = twist_phase_table(L);
  for (Eigen::Index k = 0; k < 16; ++k) {
    EXPECT_NEAR(sz(k, k).real(), m[static_cast<std::size_t>(k)], 1e-14);
    EXPECT_LT(std::abs(tw(k, k) - std::polar(1.0, u[static_cast<std::size_t>(k)])), 1e-13);
  }
}

TEST(ZeroTransverseField, MagnetizationIsConserved) {
  ChainSpec spec{4, 1, 1e-300, 3};
  const auto H = build_hamiltonian(spec, sample_disorder(spec, 8, 0));
  const StateVector psi0 = StateVector::uniform(4);
  const auto es = diagonalize(H, psi0);
  const double m0 = expectation_Mz(psi0);
  for (double t : {0.3, 1.7, 12.0}) {
    EXPECT_NEAR(expectation_Mz(evolve_exact(es, psi0, t)), m0, 1e-12);
  }
}

}  // namespace
}  // namespace locprobe
