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

#include "locprobe/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "locprobe/parallel.hpp"

namespace locprobe {
namespace {

using Mat2 = std::array<Complex, 4>;  // row-major 2x2

void apply_1q(StateVector& psi, int q, const Mat2& u) {
  Complex* a = psi.amp.data();
  const std::size_t n = psi.dim();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t base = 0; base < n; base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      const Complex a0 = a[i];
      const Complex a1 = a[i | bit];
      a[i] = u[0] * a0 + u[1] * a1;
      a[i | bit] = u[2] * a0 + u[3] * a1;
    }
  }
}

void apply_diag_1q(StateVector& psi, int q, Complex d0, Complex d1) {
  Complex* a = psi.amp.data();
  const std::size_t n = psi.dim();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < n; ++i) a[i] *= (i & bit) ? d1 : d0;
}

void apply_x(StateVector& psi, int q) {
  Complex* a = psi.amp.data();
  const std::size_t n = psi.dim();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(i & bit)) std::swap(a[i], a[i | bit]);
  }
}

void apply_cnot(StateVector& psi, int control, int target) {
  Complex* a = psi.amp.data();
  const std::size_t n = psi.dim();
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(a[i], a[i | tbit]);
  }
}

void apply_rzz(StateVector& psi, int qa, int qb, double theta) {
  Complex* a = psi.amp.data();
  const std::size_t n = psi.dim();
  const std::size_t abit = std::size_t{1} << qa;
  const std::size_t bbit = std::size_t{1} << qb;
  const Complex even = std::polar(1.0, -theta / 2.0);
  const Complex odd = std::polar(1.0, theta / 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    const bool parity = static_cast<bool>(i & abit) != static_cast<bool>(i & bbit);
    a[i] *= parity ? odd : even;
  }
}

bool bit_set(BasisIndex k, int j) { return (k >> j) & 1U; }

// Index of the first cumulative weight strictly greater than u * total.
BasisIndex sample_index(const std::vector<double>& cdf, double u) {
  const double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  if (it == cdf.end()) --it;
  return static_cast<BasisIndex>(it - cdf.begin());
}

std::vector<double> cumulative(const StateVector& psi) {
  std::vector<double> cdf(psi.dim());
  double acc = 0.0;
  for (std::size_t k = 0; k < cdf.size(); ++k) {
    acc += std::norm(psi.amp(static_cast<Eigen::Index>(k)));
    cdf[k] = acc;
  }
  return cdf;
}

BasisIndex apply_readout(BasisIndex outcome, int L, const NoiseModel& noise, CounterRng& rng) {
  for (int j = 0; j < L; ++j) {
    const double p = bit_set(outcome, j) ? noise.flip_1to0() : noise.flip_0to1();
    if (rng.uniform() < p) outcome ^= BasisIndex{1} << j;
  }
  return outcome;
}

double gate_error_probability(const Gate& g, const NoiseModel& noise) {
  return g.arity() == 2 ? noise.p_cnot : noise.p_1q;
}

// Pauli insertion decided for one gate position; 0 means none. For two-qubit
// gates the code is 1..15 encoding (first, second) = (code & 3, code >> 2).
struct Insertion {
  std::size_t gate = 0;
  unsigned code = 0;
};

void check_state(const Circuit& c, const StateVector& psi0) {
  if (psi0.L != c.num_qubits() || psi0.dim() != basis_dim(psi0.L)) {
    throw std::invalid_argument("circuit qubit count does not match the state vector");
  }
}

}  // namespace

void NoiseModel::validate() const {
  auto check = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(std::string("NoiseModel: ") + name + " must lie in [0, 1]");
    }
  };
  check(p_cnot, "p_cnot");
  check(p_1q, "p_1q");
  check(p_readout, "p_readout");
  if (p_readout_1to0) check(*p_readout_1to0, "p_readout_1to0");
}

void CountsDistribution::add(BasisIndex outcome, long n) {
  counts[outcome] += n;
  shots += n;
}

double CountsDistribution::probability(BasisIndex outcome) const {
  if (shots <= 0) throw std::invalid_argument("CountsDistribution: no shots recorded");
  const auto it = counts.find(outcome);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
}

void CountsDistribution::validate() const {
  long total = 0;
  for (const auto& [k, n] : counts) {
    if (n < 0) throw std::invalid_argument("CountsDistribution: negative count");
    if (k >= basis_dim(L)) throw std::invalid_argument("CountsDistribution: outcome exceeds L bits");
    total += n;
  }
  if (total != shots) throw std::invalid_argument("CountsDistribution: counts do not sum to shots");
}

void apply_gate(StateVector& psi, const Gate& g) {
  const int q = g.targets[0];
  switch (g.kind) {
    case GateKind::kRX: {
      const double c = std::cos(g.angle / 2.0);
      const double s = std::sin(g.angle / 2.0);
      apply_1q(psi, q, {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}});
      break;
    }
    case GateKind::kRZ:
      apply_diag_1q(psi, q, std::polar(1.0, -g.angle / 2.0), std::polar(1.0, g.angle / 2.0));
      break;
    case GateKind::kSX:
      apply_1q(psi, q, {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5},
                        Complex{0.5, 0.5}});
      break;
    case GateKind::kX:
      apply_x(psi, q);
      break;
    case GateKind::kRZZ:
      apply_rzz(psi, g.targets[0], g.targets[1], g.angle);
      break;
    case GateKind::kCNOT:
      apply_cnot(psi, g.targets[0], g.targets[1]);
      break;
  }
}

void apply_pauli(StateVector& psi, int qubit, Pauli p) {
  switch (p) {
    case Pauli::kI:
      break;
    case Pauli::kX:
      apply_x(psi, qubit);
      break;
    case Pauli::kY:
      apply_1q(psi, qubit, {Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}});
      break;
    case Pauli::kZ:
      apply_diag_1q(psi, qubit, 1.0, -1.0);
      break;
  }
}

StateVector run_ideal(const Circuit& circuit, const StateVector& psi0) {
  check_state(circuit, psi0);
  StateVector psi = psi0;
  for (const Gate& g : circuit.gates()) apply_gate(psi, g);
  return psi;
}

CountsDistribution sample_counts(const StateVector& psi, long shots, CounterRng& rng) {
  if (shots < 0) throw std::invalid_argument("sample_counts: shots must be >= 0");
  const auto cdf = cumulative(psi);
  CountsDistribution cd;
  cd.L = psi.L;
  for (long s = 0; s < shots; ++s) cd.add(sample_index(cdf, rng.uniform()));
  return cd;
}

namespace {

// Shared by the single-trajectory entry point and the batched one; `ideal_cdf`
// is reused whenever no gate error fires in a shot.
BasisIndex noisy_shot(const Circuit& circuit, const StateVector& psi0, const NoiseModel& noise,
                      CounterRng& rng, const std::vector<double>* ideal_cdf) {
  std::vector<Insertion> insertions;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const double p = gate_error_probability(gates[i], noise);
    if (p > 0.0 && rng.uniform() < p) {
      const unsigned code =
          gates[i].arity() == 2 ? 1U + static_cast<unsigned>(rng.below(15))
                                : 1U + static_cast<unsigned>(rng.below(3));
      insertions.push_back({i, code});
    }
  }

  BasisIndex outcome = 0;
  if (insertions.empty() && ideal_cdf != nullptr) {
    outcome = sample_index(*ideal_cdf, rng.uniform());
  } else {
    StateVector psi = psi0;
    auto next = insertions.begin();
    for (std::size_t i = 0; i < gates.size(); ++i) {
      apply_gate(psi, gates[i]);
      if (next != insertions.end() && next->gate == i) {
        const Gate& g = gates[i];
        if (g.arity() == 2) {
          apply_pauli(psi, g.targets[0], static_cast<Pauli>(next->code & 3U));
          apply_pauli(psi, g.targets[1], static_cast<Pauli>(next->code >> 2));
        } else {
          apply_pauli(psi, g.targets[0], static_cast<Pauli>(next->code));
        }
        ++next;
      }
    }
    outcome = sample_index(cumulative(psi), rng.uniform());
  }
  return apply_readout(outcome, circuit.num_qubits(), noise, rng);
}

}  // namespace

BasisIndex run_noisy_trajectory(const Circuit& circuit, const StateVector& psi0,
                                const NoiseModel& noise, CounterRng& rng) {
  check_state(circuit, psi0);
  noise.validate();
  return noisy_shot(circuit, psi0, noise, rng, nullptr);
}

CountsDistribution run_noisy_counts(const Circuit& circuit, const StateVector& psi0,
                                    const NoiseModel& noise, long shots, std::uint64_t key,
                                    int threads) {
  check_state(circuit, psi0);
  noise.validate();
  if (shots < 0) throw std::invalid_argument("run_noisy_counts: shots must be >= 0");

  const auto ideal_cdf = cumulative(run_ideal(circuit, psi0));
  std::vector<BasisIndex> outcomes(static_cast<std::size_t>(shots));
  parallel_for(outcomes.size(), threads, [&](std::size_t s) {
    CounterRng rng(derive_key(key, {s}));
    outcomes[s] = noisy_shot(circuit, psi0, noise, rng, &ideal_cdf);
  });

  CountsDistribution cd;
  cd.L = circuit.num_qubits();
  for (BasisIndex k : outcomes) cd.add(k);
  return cd;
}

std::string format_bitstring(BasisIndex k, int L) {
  std::string bits(static_cast<std::size_t>(L), '0');
  for (int j = 0; j < L; ++j) {
    if (bit_set(k, j)) bits[static_cast<std::size_t>(L - 1 - j)] = '1';
  }
  return bits;
}

BasisIndex parse_bitstring(const std::string& bits) {
  if (bits.empty() || bits.size() > 63) {
    throw std::invalid_argument("parse_bitstring: bad length");
  }
  BasisIndex k = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("parse_bitstring: '" + bits + "' is not a bitstring");
    }
    k = (k << 1) | static_cast<BasisIndex>(ch == '1');
  }
  return k;
}

void write_counts(std::ostream& out, const CountsDistribution& cd) {
  out << "# L=" << cd.L << " shots=" << cd.shots << '\n';
  for (const auto& [k, n] : cd.counts) out << format_bitstring(k, cd.L) << ' ' << n << '\n';
}

CountsDistribution read_counts(std::istream& in) {
  CountsDistribution cd;
  long declared_shots = -1;
  std::string raw;
  int line = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("counts line " + std::to_string(line) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "#") {
      std::string item;
      while (fields >> item) {
        if (item.rfind("L=", 0) == 0) cd.L = std::stoi(item.substr(2));
        if (item.rfind("shots=", 0) == 0) declared_shots = std::stol(item.substr(6));
      }
      continue;
    }
    if (cd.L <= 0) fail("missing '# L=<n> shots=<n>' header");
    if (static_cast<int>(first.size()) != cd.L) fail("bitstring length differs from L");
    long n = 0;
    if (!(fields >> n) || n < 0) fail("bad count");
    cd.add(parse_bitstring(first), n);
  }
  if (declared_shots >= 0 && declared_shots != cd.shots) {
    throw std::invalid_argument("counts: header shots=" + std::to_string(declared_shots) +
                                " but counts sum to " + std::to_string(cd.shots));
  }
  cd.validate();
  return cd;
}

}  // namespace locprobe
