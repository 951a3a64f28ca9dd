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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locprobe/exact_evolution.hpp"
#include "locprobe/mitigation.hpp"
#include "locprobe/simulator.hpp"
#include "locprobe/spin_model.hpp"

namespace locprobe {

enum class MethodKind { kExact, kTrotter, kNoisy, kEigenstates };

struct MethodSpec {
  MethodKind kind = MethodKind::kExact;
  // Trotter / noisy.
  int order = 1;
  int steps = 10;
  // Shots per circuit. Unset means the sweep default; 0 evaluates the
  // statevector directly (trotter only).
  std::optional<long> shots;
  // Noisy only.
  NoiseModel noise{};
  bool mitigate = true;
  long calibration_shots = 10000;
  bool bias_correct = false;
  // Eigenstates only.
  std::size_t window = 16;

  static MethodSpec exact() { return {}; }
  static MethodSpec trotter(int order, int steps, std::optional<long> shots = std::nullopt);
  static MethodSpec noisy(int order, int steps, NoiseModel noise = {});
  static MethodSpec eigenstates(std::size_t window = 16);

  // Stable identifier used in output files, e.g. "trotter_p2_m10".
  std::string label() const;
  void validate() const;
};

struct SweepConfig {
  int L = 5;
  double J = 1.0;
  double Gamma = 1.0;
  std::vector<double> w_grid{0.5, 1, 2, 3, 4, 6, 8, 10};
  double T_fin = 1.5;
  std::vector<MethodSpec> methods{MethodSpec::exact()};
  long n_realizations = 10000;        // exact, trotter, eigenstates
  long n_realizations_noisy = 1000;   // noisy
  long shots = 1024;
  std::uint64_t master_seed = 0;
  bool keep_raw = false;
  int threads = 1;

  ChainSpec chain(double w) const { return {L, J, Gamma, w}; }
  long realizations_for(const MethodSpec& m) const {
    return m.kind == MethodKind::kNoisy ? n_realizations_noisy : n_realizations;
  }
  void validate() const;
};

// Realization i at grid point w_index: fields drawn from the stream
// derive_key(master_seed, {w_index, i}), so adding grid points or methods
// leaves existing streams untouched.
DisorderRealization sweep_realization(const ChainSpec& spec, std::uint64_t master_seed,
                                      std::size_t w_index, std::uint64_t i);

struct MethodStats {
  double w = 0.0;
  std::string method;
  long n = 0;
  // Population standard deviation over realizations.
  double mean_mz = 0.0;
  double std_mz = 0.0;
  double mean_z2 = 0.0;
  double std_z2 = 0.0;
  std::vector<double> raw_mz;  // only with keep_raw
  std::vector<double> raw_z2;
};

struct SweepResult {
  // One row per (w, method), ordered by grid point then by method.
  std::vector<MethodStats> rows;

  const MethodStats& at(double w, const std::string& method) const;
};

// Per-realization observables at T_fin on the all-up initial state for every
// requested method. All methods at one grid point see the same realizations.
// Deterministic for a given config regardless of cfg.threads.
SweepResult run_sweep(const SweepConfig& cfg);

struct TimeseriesConfig {
  int L = 5;
  double J = 1.0;
  double Gamma = 1.0;
  std::vector<double> w_grid{1.0, 10.0};
  std::vector<double> times;
  int n_samples = 10;
  std::uint64_t master_seed = 0;
  int threads = 1;

  // times = {0, dt, ..., t_max} with n points.
  static std::vector<double> uniform_times(double t_max, int n);
  void validate() const;
};

struct TimeseriesSample {
  double w = 0.0;
  int sample = 0;
  std::vector<double> h;
  std::vector<double> mz;  // one value per time
  std::vector<double> z2;
};

// Exact evolution of n_samples realizations per w; M_z and |z|^2 of each
// sample come from the same wavefunctions.
std::vector<TimeseriesSample> run_timeseries(const TimeseriesConfig& cfg);

struct SpectraSample {
  double w = 0.0;
  int sample = 0;
  std::vector<double> b2;  // |b_k|^2 indexed by basis label k
  std::vector<double> c2;  // |c_k|^2
};

// Overlap spectra for the same realizations as run_timeseries() (same seed).
// Throws NumericalError if |b_0|^2 != |c_0|^2 for any sample.
std::vector<SpectraSample> run_overlap_spectra(const TimeseriesConfig& cfg);

}  // namespace locprobe
