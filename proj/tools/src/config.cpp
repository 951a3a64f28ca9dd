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

#include "locprobe/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "locprobe/errors.hpp"

namespace locprobe::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class Line {
 public:
  Line(std::string key, std::string value, int number)
      : key_(std::move(key)), value_(std::move(value)), number_(number) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("'" + key_ + "': " + what, number_);
  }

  double real() const { return parse_real(value_); }

  long integer() const {
    long v = 0;
    const auto res = std::from_chars(value_.data(), value_.data() + value_.size(), v);
    if (res.ec != std::errc{} || res.ptr != value_.data() + value_.size()) {
      fail("expected an integer, got '" + value_ + "'");
    }
    return v;
  }

  std::uint64_t seed() const {
    std::string digits = value_;
    int base = 10;
    if (digits.starts_with("0x") || digits.starts_with("0X")) {
      digits = digits.substr(2);
      base = 16;
    }
    std::uint64_t v = 0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
    if (digits.empty() || res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) {
      fail("expected an unsigned 64-bit seed, got '" + value_ + "'");
    }
    return v;
  }

  bool boolean() const {
    if (value_ == "true" || value_ == "1") return true;
    if (value_ == "false" || value_ == "0") return false;
    fail("expected true or false, got '" + value_ + "'");
  }

  std::vector<double> reals() const {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= value_.size()) {
      const auto comma = value_.find(',', start);
      const auto end = comma == std::string::npos ? value_.size() : comma;
      out.push_back(parse_real(trim(value_.substr(start, end - start))));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }

  const std::string& text() const { return value_; }

 private:
  double parse_real(const std::string& text) const {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
      fail("expected a number, got '" + text + "'");
    }
    return v;
  }

  std::string key_;
  std::string value_;
  int number_;
};

using Setter = std::function<void(const Line&)>;

std::map<std::string, Setter> global_keys(RunConfig& rc) {
  SweepConfig& s = rc.sweep;
  return {
      {"L", [&](const Line& l) { s.L = static_cast<int>(l.integer()); }},
      {"J", [&](const Line& l) { s.J = l.real(); }},
      {"Gamma", [&](const Line& l) { s.Gamma = l.real(); }},
      {"w_grid", [&](const Line& l) { s.w_grid = l.reals(); }},
      {"T_fin", [&](const Line& l) { s.T_fin = l.real(); }},
      {"n_realizations", [&](const Line& l) { s.n_realizations = l.integer(); }},
      {"n_realizations_noisy", [&](const Line& l) { s.n_realizations_noisy = l.integer(); }},
      {"shots", [&](const Line& l) { s.shots = l.integer(); }},
      {"master_seed", [&](const Line& l) { s.master_seed = l.seed(); }},
      {"keep_raw", [&](const Line& l) { s.keep_raw = l.boolean(); }},
      {"n_samples", [&](const Line& l) { rc.n_samples = static_cast<int>(l.integer()); }},
      {"t_max", [&](const Line& l) { rc.t_max = l.real(); }},
      {"n_times", [&](const Line& l) { rc.n_times = static_cast<int>(l.integer()); }},
  };
}

std::map<std::string, Setter> method_keys(MethodSpec& m) {
  return {
      {"kind",
       [&](const Line& l) {
         static const std::map<std::string, MethodKind> kinds{
             {"exact", MethodKind::kExact},
             {"trotter", MethodKind::kTrotter},
             {"noisy", MethodKind::kNoisy},
             {"eigenstates", MethodKind::kEigenstates}};
         const auto it = kinds.find(l.text());
         if (it == kinds.end()) {
           l.fail("unknown method kind '" + l.text() + "' (exact, trotter, noisy, eigenstates)");
         }
         m.kind = it->second;
       }},
      {"order", [&](const Line& l) { m.order = static_cast<int>(l.integer()); }},
      {"steps", [&](const Line& l) { m.steps = static_cast<int>(l.integer()); }},
      {"shots", [&](const Line& l) { m.shots = l.integer(); }},
      {"p_cnot", [&](const Line& l) { m.noise.p_cnot = l.real(); }},
      {"p_1q", [&](const Line& l) { m.noise.p_1q = l.real(); }},
      {"p_readout", [&](const Line& l) { m.noise.p_readout = l.real(); }},
      {"p_readout_1to0", [&](const Line& l) { m.noise.p_readout_1to0 = l.real(); }},
      {"mitigate", [&](const Line& l) { m.mitigate = l.boolean(); }},
      {"calibration_shots", [&](const Line& l) { m.calibration_shots = l.integer(); }},
      {"bias_correct", [&](const Line& l) { m.bias_correct = l.boolean(); }},
      {"window",
       [&](const Line& l) {
         const long v = l.integer();
         if (v < 1) l.fail("window must be >= 1");
         m.window = static_cast<std::size_t>(v);
       }},
  };
}

}  // namespace

TimeseriesConfig RunConfig::timeseries() const {
  TimeseriesConfig tc;
  tc.L = sweep.L;
  tc.J = sweep.J;
  tc.Gamma = sweep.Gamma;
  tc.w_grid = sweep.w_grid;
  tc.n_samples = n_samples;
  tc.master_seed = sweep.master_seed;
  tc.threads = sweep.threads;
  tc.times = TimeseriesConfig::uniform_times(t_max, n_times);
  return tc;
}

RunConfig parse_config(std::istream& in) {
  RunConfig rc;
  std::vector<MethodSpec> methods;
  std::vector<int> method_lines;
  std::set<std::string> seen;
  bool in_method = false;

  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text != "[method]") throw ConfigError("unknown section '" + text + "'", number);
      methods.emplace_back();
      method_lines.push_back(number);
      seen.clear();
      in_method = true;
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", number);
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", number);
    if (value.empty()) throw ConfigError("'" + key + "': missing value", number);
    if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'", number);

    const Line line(key, value, number);
    auto setters = in_method ? method_keys(methods.back()) : global_keys(rc);
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError(std::string("unknown ") + (in_method ? "method" : "global") + " key '" +
                            key + "'",
                        number);
    }
    it->second(line);
  }

  if (!methods.empty()) rc.sweep.methods = methods;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    try {
      methods[i].validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what(), method_lines[i]);
    }
  }
  try {
    rc.sweep.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (rc.n_samples < 1) throw ConfigError("n_samples must be >= 1");
  if (rc.n_times < 1) throw ConfigError("n_times must be >= 1");
  if (!(rc.t_max >= 0.0)) throw ConfigError("t_max must be >= 0");
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace locprobe::cli
