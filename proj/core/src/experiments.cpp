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

#include "locprobe/experiments.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "locprobe/errors.hpp"
#include "locprobe/observables.hpp"
#include "locprobe/parallel.hpp"
#include "locprobe/rng.hpp"
#include "locprobe/trotter.hpp"

namespace locprobe {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kCalibrationStream = 0xCA11B4A7E0ULL;

std::uint64_t label_hash(const std::string& label) {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

bool needs_eigensystem(const std::vector<MethodSpec>& methods) {
  for (const auto& m : methods) {
    if (m.kind == MethodKind::kExact || m.kind == MethodKind::kEigenstates) return true;
  }
  return false;
}

std::string describe(double w, std::uint64_t i) {
  std::ostringstream os;
  os << "w=" << w << ", realization=" << i;
  return os.str();
}

// Single-pass mean and population variance.
struct RunningStats {
  long n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  double stddev() const { return n > 0 ? std::sqrt(m2 / static_cast<double>(n)) : kNaN; }
};

struct Observed {
  double mz = kNaN;
  double z2 = kNaN;
};

Observed from_state(const StateVector& psi) {
  return {expectation_Mz(psi), std::norm(expectation_twist(psi))};
}

Observed from_quasi(const QuasiDistribution& q, bool bias_correct) {
  const TwistEstimate tw = twist_from_quasi(q);
  return {mz_from_quasi(q), bias_correct ? tw.z2_corrected : tw.z2};
}

}  // namespace

MethodSpec MethodSpec::trotter(int order, int steps, std::optional<long> shots) {
  MethodSpec m;
  m.kind = MethodKind::kTrotter;
  m.order = order;
  m.steps = steps;
  m.shots = shots;
  return m;
}

MethodSpec MethodSpec::noisy(int order, int steps, NoiseModel noise) {
  MethodSpec m;
  m.kind = MethodKind::kNoisy;
  m.order = order;
  m.steps = steps;
  m.noise = noise;
  return m;
}

MethodSpec MethodSpec::eigenstates(std::size_t window) {
  MethodSpec m;
  m.kind = MethodKind::kEigenstates;
  m.window = window;
  return m;
}

std::string MethodSpec::label() const {
  switch (kind) {
    case MethodKind::kExact:
      return "exact";
    case MethodKind::kTrotter:
      return "trotter_p" + std::to_string(order) + "_m" + std::to_string(steps);
    case MethodKind::kNoisy:
      return "noisy_p" + std::to_string(order) + "_m" + std::to_string(steps) +
             (mitigate ? "" : "_raw");
    case MethodKind::kEigenstates:
      return "eigenstates_" + std::to_string(window);
  }
  return "?";
}

void MethodSpec::validate() const {
  if (kind == MethodKind::kTrotter || kind == MethodKind::kNoisy) {
    if (order != 1 && order != 2) throw std::invalid_argument("method: order must be 1 or 2");
    if (steps < 1) throw std::invalid_argument("method: steps must be >= 1");
  }
  if (shots && *shots < 0) throw std::invalid_argument("method: shots must be >= 0");
  if (kind == MethodKind::kNoisy) {
    noise.validate();
    if (shots && *shots == 0) throw std::invalid_argument("method: noisy runs need shots > 0");
    if (mitigate && calibration_shots < 1000) {
      throw std::invalid_argument("method: calibration_shots must be >= 1000");
    }
  }
  if (kind == MethodKind::kEigenstates && window == 0) {
    throw std::invalid_argument("method: window must be >= 1");
  }
}

void SweepConfig::validate() const {
  chain(0.0).validate();
  if (w_grid.empty()) throw std::invalid_argument("sweep: w_grid must not be empty");
  for (double w : w_grid) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("sweep: w must be >= 0");
  }
  if (!(T_fin > 0.0) || !std::isfinite(T_fin)) throw std::invalid_argument("sweep: T_fin must be > 0");
  if (methods.empty()) throw std::invalid_argument("sweep: no methods requested");
  if (n_realizations < 1 || n_realizations_noisy < 1) {
    throw std::invalid_argument("sweep: realization counts must be >= 1");
  }
  if (shots < 1) throw std::invalid_argument("sweep: shots must be >= 1");
  std::set<std::string> labels;
  for (const auto& m : methods) {
    m.validate();
    if (m.kind == MethodKind::kEigenstates && m.window > chain(0.0).dim()) {
      throw std::invalid_argument("sweep: eigenstate window exceeds 2^L");
    }
    if (!labels.insert(m.label()).second) {
      throw std::invalid_argument("sweep: duplicate method '" + m.label() + "'");
    }
  }
}

DisorderRealization sweep_realization(const ChainSpec& spec, std::uint64_t master_seed,
                                      std::size_t w_index, std::uint64_t i) {
  return sample_disorder(spec, derive_key(master_seed, {w_index}), i);
}

const MethodStats& SweepResult::at(double w, const std::string& method) const {
  for (const auto& row : rows) {
    if (row.w == w && row.method == method) return row;
  }
  throw std::out_of_range("SweepResult: no row for method '" + method + "'");
}

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::size_t n_methods = cfg.methods.size();
  const bool want_eigen = needs_eigensystem(cfg.methods);
  const StateVector psi0 = StateVector::all_up(cfg.L);

  std::vector<std::string> labels(n_methods);
  std::vector<std::optional<ConfusionModel>> confusion(n_methods);
  for (std::size_t mi = 0; mi < n_methods; ++mi) {
    const MethodSpec& m = cfg.methods[mi];
    labels[mi] = m.label();
    if (m.kind == MethodKind::kNoisy && m.mitigate) {
      confusion[mi] = calibrate(m.noise, cfg.L, m.calibration_shots,
                                derive_key(cfg.master_seed, {kCalibrationStream, label_hash(labels[mi])}),
                                cfg.threads);
    }
  }

  long n_max = 0;
  for (const auto& m : cfg.methods) n_max = std::max(n_max, cfg.realizations_for(m));

  SweepResult result;
  for (std::size_t wi = 0; wi < cfg.w_grid.size(); ++wi) {
    const double w = cfg.w_grid[wi];
    const ChainSpec spec = cfg.chain(w);
    std::vector<std::vector<Observed>> values(static_cast<std::size_t>(n_max),
                                              std::vector<Observed>(n_methods));

    parallel_for(static_cast<std::size_t>(n_max), cfg.threads, [&](std::size_t i) {
      const auto real = sweep_realization(spec, cfg.master_seed, wi, i);
      std::optional<EigenSystem> es;
      if (want_eigen) {
        es = diagonalize(build_hamiltonian(spec, real), psi0,
                         DiagonalizeOptions{EigenMethod::kAuto, describe(w, i)});
      }
      for (std::size_t mi = 0; mi < n_methods; ++mi) {
        const MethodSpec& m = cfg.methods[mi];
        if (static_cast<long>(i) >= cfg.realizations_for(m)) continue;
        const std::uint64_t shot_key =
            derive_key(cfg.master_seed, {wi, i, label_hash(labels[mi])});
        try {
          switch (m.kind) {
            case MethodKind::kExact:
              values[i][mi] = from_state(evolve_exact(*es, cfg.T_fin));
              break;
            case MethodKind::kEigenstates:
              values[i][mi] = {kNaN, eigenstate_twist_overlap(*es, m.window)};
              break;
            case MethodKind::kTrotter: {
              const auto psi =
                  run_ideal(build_trotter_circuit(spec, real, cfg.T_fin, m.order, m.steps), psi0);
              const long shots = m.shots.value_or(cfg.shots);
              if (shots == 0) {
                values[i][mi] = from_state(psi);
              } else {
                CounterRng rng(shot_key);
                values[i][mi] = from_quasi(
                    QuasiDistribution::from_counts(sample_counts(psi, shots, rng)), m.bias_correct);
              }
              break;
            }
            case MethodKind::kNoisy: {
              const Circuit circuit =
                  transpile(build_trotter_circuit(spec, real, cfg.T_fin, m.order, m.steps));
              const auto counts =
                  run_noisy_counts(circuit, psi0, m.noise, m.shots.value_or(cfg.shots), shot_key);
              values[i][mi] = from_quasi(confusion[mi] ? mitigate(counts, *confusion[mi])
                                                       : QuasiDistribution::from_counts(counts),
                                         m.bias_correct);
              break;
            }
          }
        } catch (const NumericalError& e) {
          throw NumericalError(std::string(e.what()) + " [" + describe(w, i) + ", method=" +
                               labels[mi] + "]");
        }
      }
    });

    for (std::size_t mi = 0; mi < n_methods; ++mi) {
      const long n = cfg.realizations_for(cfg.methods[mi]);
      RunningStats mz;
      RunningStats z2;
      MethodStats row;
      row.w = w;
      row.method = labels[mi];
      row.n = n;
      for (long i = 0; i < n; ++i) {
        const Observed& v = values[static_cast<std::size_t>(i)][mi];
        mz.push(v.mz);
        z2.push(v.z2);
        if (cfg.keep_raw) {
          row.raw_mz.push_back(v.mz);
          row.raw_z2.push_back(v.z2);
        }
      }
      row.mean_mz = mz.mean;
      row.std_mz = mz.stddev();
      row.mean_z2 = z2.mean;
      row.std_z2 = z2.stddev();
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

std::vector<double> TimeseriesConfig::uniform_times(double t_max, int n) {
  if (n < 1) throw std::invalid_argument("uniform_times: need at least one point");
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = n == 1 ? 0.0 : t_max * i / (n - 1);
  return t;
}

void TimeseriesConfig::validate() const {
  ChainSpec{L, J, Gamma, 0.0}.validate();
  if (w_grid.empty()) throw std::invalid_argument("timeseries: w_grid must not be empty");
  if (n_samples < 1) throw std::invalid_argument("timeseries: n_samples must be >= 1");
  for (double t : times) {
    if (!std::isfinite(t)) throw std::invalid_argument("timeseries: times must be finite");
  }
}

namespace {

template <typename Body>
void for_each_sample(const TimeseriesConfig& cfg, Body&& body) {
  const std::size_t per_w = static_cast<std::size_t>(cfg.n_samples);
  parallel_for(cfg.w_grid.size() * per_w, cfg.threads, [&](std::size_t flat) {
    const std::size_t wi = flat / per_w;
    const std::size_t i = flat % per_w;
    const ChainSpec spec{cfg.L, cfg.J, cfg.Gamma, cfg.w_grid[wi]};
    const auto real = sweep_realization(spec, cfg.master_seed, wi, i);
    const auto es = diagonalize(build_hamiltonian(spec, real), StateVector::all_up(cfg.L),
                                DiagonalizeOptions{EigenMethod::kAuto, describe(spec.w, i)});
    body(flat, spec.w, static_cast<int>(i), real, es);
  });
}

}  // namespace

std::vector<TimeseriesSample> run_timeseries(const TimeseriesConfig& cfg) {
  cfg.validate();
  std::vector<TimeseriesSample> out(cfg.w_grid.size() * static_cast<std::size_t>(cfg.n_samples));
  for_each_sample(cfg, [&](std::size_t flat, double w, int sample,
                           const DisorderRealization& real, const EigenSystem& es) {
    TimeseriesSample& s = out[flat];
    s.w = w;
    s.sample = sample;
    s.h = real.h;
    for (double t : cfg.times) {
      const auto psi = evolve_exact(es, t);
      s.mz.push_back(expectation_Mz(psi));
      s.z2.push_back(std::norm(expectation_twist(psi)));
    }
  });
  return out;
}

std::vector<SpectraSample> run_overlap_spectra(const TimeseriesConfig& cfg) {
  cfg.validate();
  std::vector<SpectraSample> out(cfg.w_grid.size() * static_cast<std::size_t>(cfg.n_samples));
  for_each_sample(cfg, [&](std::size_t flat, double w, int sample,
                           const DisorderRealization&, const EigenSystem& es) {
    SpectraSample& s = out[flat];
    s.w = w;
    s.sample = sample;
    s.b2.resize(es.dim());
    s.c2.resize(es.dim());
    for (std::size_t k = 0; k < es.dim(); ++k) {
      const auto ki = static_cast<Eigen::Index>(k);
      s.b2[k] = es.b(ki) * es.b(ki);
      s.c2[k] = std::norm(es.c(ki));
    }
    if (std::abs(s.b2[0] - s.c2[0]) > 1e-12) {
      throw NumericalError("overlap spectra: |b_0|^2 != |c_0|^2 [" + describe(w, sample) + "]");
    }
  });
  return out;
}

}  // namespace locprobe
