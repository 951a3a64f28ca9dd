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

#include "locprobe/observables.hpp"

#include <stdexcept>

namespace locprobe {
namespace {

void require_shots(long shots) {
  if (shots <= 0) throw std::invalid_argument("observable estimate needs at least one shot");
}

}  // namespace

double QuasiDistribution::total() const {
  double acc = 0.0;
  for (const auto& [k, p] : probs) acc += p;
  return acc;
}

QuasiDistribution QuasiDistribution::from_counts(const CountsDistribution& cd) {
  require_shots(cd.shots);
  QuasiDistribution q;
  q.L = cd.L;
  q.shots = cd.shots;
  for (const auto& [k, n] : cd.counts) {
    q.probs[k] = static_cast<double>(n) / static_cast<double>(cd.shots);
  }
  return q;
}

double mz_from_quasi(const QuasiDistribution& q) {
  require_shots(q.shots);
  double acc = 0.0;
  for (const auto& [k, p] : q.probs) acc += p * magnetization_eigenvalue(k, q.L);
  return acc;
}

TwistEstimate twist_from_quasi(const QuasiDistribution& q) {
  require_shots(q.shots);
  TwistEstimate est;
  for (const auto& [k, p] : q.probs) est.z += p * std::polar(1.0, twist_phase(k, q.L));
  est.z2 = std::norm(est.z);
  est.z2_corrected = q.shots > 1 ? est.z2 - (1.0 - est.z2) / static_cast<double>(q.shots - 1)
                                 : est.z2;
  return est;
}

double mz_from_counts(const CountsDistribution& cd) {
  return mz_from_quasi(QuasiDistribution::from_counts(cd));
}

TwistEstimate twist_from_counts(const CountsDistribution& cd) {
  return twist_from_quasi(QuasiDistribution::from_counts(cd));
}

}  // namespace locprobe
