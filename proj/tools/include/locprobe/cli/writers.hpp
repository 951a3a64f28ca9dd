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

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "locprobe/experiments.hpp"

namespace locprobe::cli {

// Nine significant digits, '.' decimal point regardless of locale.
std::string format_number(double value);

// w,method,mean_mz,std_mz,mean_z2,std_z2,n_realizations
void write_sweep_csv(std::ostream& out, const SweepResult& result);
// w,sample,t,mz,z2
void write_timeseries_csv(std::ostream& out, std::span<const double> times,
                          const std::vector<TimeseriesSample>& samples);
// w,sample,k,b2,c2
void write_spectra_csv(std::ostream& out, const std::vector<SpectraSample>& samples);

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;  // NaN breaks the polyline
};

struct PlotPanel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

// Panels laid out row-major on a grid with `columns` columns.
void write_svg(std::ostream& out, const std::vector<PlotPanel>& panels, int columns);

// Average and spread of M_z and |z|^2 against w, one line per method.
std::vector<PlotPanel> sweep_panels(const SweepResult& result);
// M_z(t) and |z(t)|^2, one column per w, one line per sample.
std::vector<PlotPanel> timeseries_panels(std::span<const double> times,
                                         const std::vector<TimeseriesSample>& samples);
// |b_k|^2 and |c_k|^2 against k, one column per w, one line per sample.
std::vector<PlotPanel> spectra_panels(const std::vector<SpectraSample>& samples);

}  // namespace locprobe::cli
