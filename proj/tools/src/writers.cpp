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

#include "locprobe/cli/writers.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace locprobe::cli {
namespace {

constexpr double kPanelWidth = 420.0;
constexpr double kPanelHeight = 300.0;
constexpr double kMarginLeft = 62.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 28.0;
constexpr double kMarginBottom = 44.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Coordinates only need a few digits.
std::string coord(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string tick(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 3);
  return std::string(buf, res.ptr);
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    } else if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

void write_panel(std::ostream& out, const PlotPanel& panel, double ox, double oy) {
  Range xr;
  Range yr;
  for (const auto& s : panel.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (std::isfinite(s.y[i])) {
        xr.add(s.x[i]);
        yr.add(s.y[i]);
      }
    }
  }
  xr.settle();
  yr.settle();

  const double x0 = ox + kMarginLeft;
  const double x1 = ox + kPanelWidth - kMarginRight;
  const double y0 = oy + kPanelHeight - kMarginBottom;
  const double y1 = oy + kMarginTop;
  const auto px = [&](double x) { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
  const auto py = [&](double y) { return y0 - (y - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

  out << "<g>\n";
  out << "<rect x=\"" << coord(x0) << "\" y=\"" << coord(y1) << "\" width=\"" << coord(x1 - x0)
      << "\" height=\"" << coord(y0 - y1) << "\" fill=\"none\" stroke=\"#000\"/>\n";
  out << "<text x=\"" << coord((x0 + x1) / 2) << "\" y=\"" << coord(oy + 18)
      << "\" text-anchor=\"middle\">" << escape(panel.title) << "</text>\n";
  out << "<text x=\"" << coord((x0 + x1) / 2) << "\" y=\"" << coord(oy + kPanelHeight - 8)
      << "\" text-anchor=\"middle\">" << escape(panel.x_label) << "</text>\n";
  out << "<text x=\"" << coord(ox + 14) << "\" y=\"" << coord((y0 + y1) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << coord(ox + 14) << ' '
      << coord((y0 + y1) / 2) << ")\">" << escape(panel.y_label) << "</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    out << "<text x=\"" << coord(px(fx)) << "\" y=\"" << coord(y0 + 16)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << tick(fx) << "</text>\n";
    out << "<text x=\"" << coord(x0 - 4) << "\" y=\"" << coord(py(fy) + 3)
        << "\" font-size=\"10\" text-anchor=\"end\">" << tick(fy) << "</text>\n";
  }

  for (std::size_t si = 0; si < panel.series.size(); ++si) {
    const auto& s = panel.series[si];
    const char* color = kPalette[si % std::size(kPalette)];
    std::string points;
    const auto flush = [&] {
      if (!points.empty()) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\""
            << points << "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += coord(px(s.x[i])) + "," + coord(py(s.y[i]));
    }
    flush();
    if (!s.label.empty()) {
      out << "<text x=\"" << coord(x1 - 4) << "\" y=\"" << coord(y1 + 12 + 11.0 * si)
          << "\" font-size=\"10\" text-anchor=\"end\" fill=\"" << color << "\">"
          << escape(s.label) << "</text>\n";
    }
  }
  out << "</g>\n";
}

std::vector<double> distinct_w(const auto& rows) {
  std::vector<double> ws;
  for (const auto& r : rows) {
    if (std::find(ws.begin(), ws.end(), r.w) == ws.end()) ws.push_back(r.w);
  }
  return ws;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "w,method,mean_mz,std_mz,mean_z2,std_z2,n_realizations\n";
  for (const auto& r : result.rows) {
    out << format_number(r.w) << ',' << r.method << ',' << format_number(r.mean_mz) << ','
        << format_number(r.std_mz) << ',' << format_number(r.mean_z2) << ','
        << format_number(r.std_z2) << ',' << r.n << '\n';
  }
}

void write_timeseries_csv(std::ostream& out, std::span<const double> times,
                          const std::vector<TimeseriesSample>& samples) {
  out << "w,sample,t,mz,z2\n";
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < times.size(); ++i) {
      out << format_number(s.w) << ',' << s.sample << ',' << format_number(times[i]) << ','
          << format_number(s.mz[i]) << ',' << format_number(s.z2[i]) << '\n';
    }
  }
}

void write_spectra_csv(std::ostream& out, const std::vector<SpectraSample>& samples) {
  out << "w,sample,k,b2,c2\n";
  for (const auto& s : samples) {
    for (std::size_t k = 0; k < s.b2.size(); ++k) {
      out << format_number(s.w) << ',' << s.sample << ',' << k << ',' << format_number(s.b2[k])
          << ',' << format_number(s.c2[k]) << '\n';
    }
  }
}

void write_svg(std::ostream& out, const std::vector<PlotPanel>& panels, int columns) {
  columns = std::max(1, columns);
  const int rows = (static_cast<int>(panels.size()) + columns - 1) / columns;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << coord(kPanelWidth * columns)
      << "\" height=\"" << coord(kPanelHeight * std::max(rows, 1))
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const int r = static_cast<int>(i) / columns;
    const int c = static_cast<int>(i) % columns;
    write_panel(out, panels[i], kPanelWidth * c, kPanelHeight * r);
  }
  out << "</svg>\n";
}

std::vector<PlotPanel> sweep_panels(const SweepResult& result) {
  std::vector<std::string> methods;
  for (const auto& r : result.rows) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
  }
  std::vector<PlotPanel> panels{{"(a) average M_z", "w", "<M_z>", {}},
                                {"(b) std M_z", "w", "std M_z", {}},
                                {"(c) average |z|^2", "w", "<|z|^2>", {}},
                                {"(d) std |z|^2", "w", "std |z|^2", {}}};
  for (const auto& method : methods) {
    std::array<PlotSeries, 4> s;
    for (auto& one : s) one.label = method;
    for (const auto& r : result.rows) {
      if (r.method != method) continue;
      const double values[4] = {r.mean_mz, r.std_mz, r.mean_z2, r.std_z2};
      for (int i = 0; i < 4; ++i) {
        s[static_cast<std::size_t>(i)].x.push_back(r.w);
        s[static_cast<std::size_t>(i)].y.push_back(values[i]);
      }
    }
    for (std::size_t i = 0; i < 4; ++i) panels[i].series.push_back(std::move(s[i]));
  }
  return panels;
}

std::vector<PlotPanel> timeseries_panels(std::span<const double> times,
                                         const std::vector<TimeseriesSample>& samples) {
  const auto ws = distinct_w(samples);
  std::vector<PlotPanel> panels;
  for (int obs = 0; obs < 2; ++obs) {
    for (double w : ws) {
      PlotPanel p{(obs == 0 ? "M_z, w = " : "|z|^2, w = ") + tick(w), "t",
                  obs == 0 ? "M_z" : "|z|^2", {}};
      for (const auto& s : samples) {
        if (s.w != w) continue;
        p.series.push_back({"", {times.begin(), times.end()}, obs == 0 ? s.mz : s.z2});
      }
      panels.push_back(std::move(p));
    }
  }
  return panels;
}

std::vector<PlotPanel> spectra_panels(const std::vector<SpectraSample>& samples) {
  const auto ws = distinct_w(samples);
  std::vector<PlotPanel> panels;
  for (int obs = 0; obs < 2; ++obs) {
    for (double w : ws) {
      PlotPanel p{(obs == 0 ? "|b_k|^2, w = " : "|c_k|^2, w = ") + tick(w), "k",
                  obs == 0 ? "|b_k|^2" : "|c_k|^2", {}};
      for (const auto& s : samples) {
        if (s.w != w) continue;
        PlotSeries one;
        const auto& y = obs == 0 ? s.b2 : s.c2;
        for (std::size_t k = 0; k < y.size(); ++k) one.x.push_back(static_cast<double>(k));
        one.y = y;
        p.series.push_back(std::move(one));
      }
      panels.push_back(std::move(p));
    }
  }
  return panels;
}

}  // namespace locprobe::cli
