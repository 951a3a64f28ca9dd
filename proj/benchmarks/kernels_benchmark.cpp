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

#include <benchmark/benchmark.h>

#include "locprobe/eigensolver.hpp"
#include "locprobe/exact_evolution.hpp"
#include "locprobe/experiments.hpp"
#include "locprobe/simulator.hpp"
#include "locprobe/trotter.hpp"

namespace locprobe {
namespace {

void BM_Diagonalize(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const ChainSpec spec{L, 1, 1, 4};
  const auto H = build_hamiltonian(spec, sample_disorder(spec, 1, 0));
  const auto psi0 = StateVector::all_up(L);
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(H, psi0));
}
BENCHMARK(BM_Diagonalize)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

void BM_JacobiVsHouseholder(benchmark::State& state) {
  const ChainSpec spec{6, 1, 1, 4};
  const auto H = build_hamiltonian(spec, sample_disorder(spec, 1, 0));
  const auto method = state.range(0) == 0 ? EigenMethod::kJacobi : EigenMethod::kHouseholder;
  for (auto _ : state) benchmark::DoNotOptimize(eigh(H.entries, method));
}
BENCHMARK(BM_JacobiVsHouseholder)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_RunIdeal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ChainSpec spec{5, 1, 1, 4};
  const auto c = transpile(build_trotter_circuit(spec, sample_disorder(spec, 1, 0), 1.5, 2, m));
  const auto psi0 = StateVector::all_up(5);
  for (auto _ : state) benchmark::DoNotOptimize(run_ideal(c, psi0));
  state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_RunIdeal)->Arg(10)->Arg(15)->Unit(benchmark::kMicrosecond);

void BM_NoisyCounts(benchmark::State& state) {
  const ChainSpec spec{5, 1, 1, 4};
  const auto c = transpile(build_trotter_circuit(spec, sample_disorder(spec, 1, 0), 1.5, 1, 10));
  const auto psi0 = StateVector::all_up(5);
  std::uint64_t key = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_noisy_counts(c, psi0, NoiseModel{}, 1024, ++key));
  }
}
BENCHMARK(BM_NoisyCounts)->Unit(benchmark::kMillisecond);

void BM_SmallSweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.w_grid = {1, 10};
  cfg.n_realizations = 50;
  cfg.methods = {MethodSpec::exact(), MethodSpec::trotter(2, 10, 0), MethodSpec::eigenstates()};
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg));
}
BENCHMARK(BM_SmallSweep)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace locprobe

BENCHMARK_MAIN();
