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

#include "locprobe/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "locprobe/cli/config.hpp"
#include "locprobe/cli/writers.hpp"
#include "locprobe/errors.hpp"
#include "locprobe/trotter.hpp"

namespace locprobe::cli {
namespace {

struct RunFlags {
  std::string config;
  std::string out_dir = ".";
  bool svg = false;
  int threads = 1;
  std::optional<std::uint64_t> seed;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config, "Run file (key = value, [method] sections)")->required();
  cmd->add_option("--out", f.out_dir, "Output directory")->capture_default_str();
  cmd->add_flag("--svg", f.svg, "Also write an SVG figure");
  cmd->add_option("--threads", f.threads, "Worker threads, 0 = all cores")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", f.seed, "Override master_seed from the run file");
}

RunConfig load(const RunFlags& f) {
  RunConfig rc = load_config(f.config);
  rc.sweep.threads = f.threads;
  if (f.seed) rc.sweep.master_seed = *f.seed;
  return rc;
}

std::filesystem::path output_path(const RunFlags& f, const std::string& name) {
  std::filesystem::create_directories(f.out_dir);
  return std::filesystem::path(f.out_dir) / name;
}

template <typename Writer>
void write_file(const std::filesystem::path& path, std::ostream& log, Writer&& writer) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path.string() + "'");
  writer(file);
  file.flush();
  if (!file) throw std::runtime_error("write failed for '" + path.string() + "'");
  log << "wrote " << path.string() << '\n';
}

int cmd_sweep(const RunFlags& f, std::ostream& out) {
  const RunConfig rc = load(f);
  const SweepResult result = run_sweep(rc.sweep);
  write_file(output_path(f, "sweep.csv"), out,
             [&](std::ostream& s) { write_sweep_csv(s, result); });
  if (f.svg) {
    write_file(output_path(f, "sweep.svg"), out,
               [&](std::ostream& s) { write_svg(s, sweep_panels(result), 2); });
  }
  return kExitOk;
}

int cmd_timeseries(const RunFlags& f, std::ostream& out) {
  const TimeseriesConfig tc = load(f).timeseries();
  const auto samples = run_timeseries(tc);
  write_file(output_path(f, "timeseries.csv"), out,
             [&](std::ostream& s) { write_timeseries_csv(s, tc.times, samples); });
  if (f.svg) {
    write_file(output_path(f, "timeseries.svg"), out, [&](std::ostream& s) {
      write_svg(s, timeseries_panels(tc.times, samples), static_cast<int>(tc.w_grid.size()));
    });
  }
  return kExitOk;
}

int cmd_spectra(const RunFlags& f, std::ostream& out) {
  const TimeseriesConfig tc = load(f).timeseries();
  const auto samples = run_overlap_spectra(tc);
  write_file(output_path(f, "spectra.csv"), out,
             [&](std::ostream& s) { write_spectra_csv(s, samples); });
  if (f.svg) {
    write_file(output_path(f, "spectra.svg"), out, [&](std::ostream& s) {
      write_svg(s, spectra_panels(samples), static_cast<int>(tc.w_grid.size()));
    });
  }
  return kExitOk;
}

struct GateFlags {
  int L = 5;
  int p = 1;
  int m = 10;
  std::string dump;
};

int cmd_gatecount(const GateFlags& g, std::ostream& out, std::ostream& err) {
  if (g.m < 1) throw ConfigError("--m: m >= 1 required, got " + std::to_string(g.m));
  if (g.p != 1 && g.p != 2) throw ConfigError("--p: order must be 1 or 2");
  const ChainSpec spec{g.L, 1.0, 1.0, 1.0};
  spec.validate();

  const GateCount formula = count_gates(spec, g.p, g.m);
  // Any realization works; zero-angle rotations are kept by the transpiler.
  const Circuit circuit =
      transpile(build_trotter_circuit(spec, sample_disorder(spec, 0, 0), 1.5, g.p, g.m));
  const GateCount actual = tally(circuit);
  if (!g.dump.empty()) {
    std::ofstream file(g.dump, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + g.dump + "'");
    write_circuit(file, circuit);
  }
  if (actual != formula) {
    err << "gatecount: transpiled circuit has single=" << actual.single_qubit
        << " two=" << actual.two_qubit << ", formula gives single=" << formula.single_qubit
        << " two=" << formula.two_qubit << '\n';
    return kExitNumerical;
  }
  out << "single=" << formula.single_qubit << " two=" << formula.two_qubit << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disordered transverse-field Ising chain: sweeps, time series, spectra"};
  app.name("locprobe");
  app.require_subcommand(1);

  RunFlags sweep_flags;
  RunFlags series_flags;
  RunFlags spectra_flags;
  GateFlags gate_flags;
  auto* sweep = app.add_subcommand("sweep", "Disorder sweep of M_z and |z|^2 at T_fin");
  add_run_flags(sweep, sweep_flags);
  auto* series = app.add_subcommand("timeseries", "Exact M_z(t), |z(t)|^2 per sample");
  add_run_flags(series, series_flags);
  auto* spectra = app.add_subcommand("spectra", "Overlaps |b_k|^2 and |c_k|^2 per sample");
  add_run_flags(spectra, spectra_flags);
  auto* gates = app.add_subcommand("gatecount", "Transpiled gate counts of a Trotter circuit");
  gates->add_option("--L", gate_flags.L, "Sites")->capture_default_str();
  gates->add_option("--p", gate_flags.p, "Trotter order (1 or 2)")->required();
  gates->add_option("--m", gate_flags.m, "Trotter steps")->required();
  gates->add_option("--dump", gate_flags.dump, "Write the transpiled circuit to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*sweep) return cmd_sweep(sweep_flags, out);
    if (*series) return cmd_timeseries(series_flags, out);
    if (*spectra) return cmd_spectra(spectra_flags, out);
    return cmd_gatecount(gate_flags, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace locprobe::cli
