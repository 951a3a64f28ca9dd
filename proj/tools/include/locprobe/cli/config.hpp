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
#include <istream>
#include <string>
#include <vector>

#include "locprobe/experiments.hpp"

namespace locprobe::cli {

// Parsed contents of a run file.
//
//   # comment
//   L = 5
//   w_grid = 0.5, 1, 2, 4, 10
//   master_seed = 7
//
//   [method]
//   kind = noisy
//   order = 2
//   steps = 10
//   p_readout = 0.02
//
// Keys before the first [method] section are global; each [method] section
// adds one method to the sweep. A file without sections runs the exact method.
struct RunConfig {
  SweepConfig sweep;
  // Timeseries and spectra.
  int n_samples = 10;
  double t_max = 5.0;
  int n_times = 201;

  TimeseriesConfig timeseries() const;
};

// Throws ConfigError carrying the offending line.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

}  // namespace locprobe::cli
