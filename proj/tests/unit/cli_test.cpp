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

#include <clocale>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "locprobe/cli/commands.hpp"
#include "locprobe/cli/config.hpp"
#include "locprobe/cli/writers.hpp"
#include "locprobe/errors.hpp"

#ifndef LOCPROBE_TEST_DATA_DIR
#error "LOCPROBE_TEST_DATA_DIR must point at tests/data"
#endif

namespace locprobe::cli {
namespace {

namespace fs = std::filesystem;

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

int config_error_line(const std::string& text, std::string* what = nullptr) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    if (what) *what = e.what();
    return e.line();
  }
  return -1;
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "locprobe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("locprobe_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(ParseConfig, DefaultsToTheExactMethod) {
  const auto cfg = parse("# nothing but a comment\n\n");
  ASSERT_EQ(cfg.sweep.methods.size(), 1u);
  EXPECT_EQ(cfg.sweep.methods[0].label(), "exact");
  EXPECT_EQ(cfg.sweep.L, 5);
}

TEST(ParseConfig, GlobalAndMethodKeys) {
  const auto cfg = parse(
      "L = 4\n"
      "w_grid = 0.5, 2 ,8\n"
      "master_seed = 0xff\n"
      "keep_raw = true\n"
      "n_times = 11\n"
      "[method]\n"
      "kind = noisy\n"
      "order = 2\n"
      "steps = 15\n"
      "p_readout = 0.05\n"
      "p_readout_1to0 = 0.1\n"
      "mitigate = false\n"
      "[method]\n"
      "kind = eigenstates\n"
      "window = 4\n");
  EXPECT_EQ(cfg.sweep.L, 4);
  EXPECT_EQ(cfg.sweep.w_grid, (std::vector<double>{0.5, 2, 8}));
  EXPECT_EQ(cfg.sweep.master_seed, 255u);
  EXPECT_TRUE(cfg.sweep.keep_raw);
  EXPECT_EQ(cfg.n_times, 11);
  ASSERT_EQ(cfg.sweep.methods.size(), 2u);
  const auto& noisy = cfg.sweep.methods[0];
  EXPECT_EQ(noisy.label(), "noisy_p2_m15_raw");
  EXPECT_EQ(noisy.noise.p_readout, 0.05);
  EXPECT_EQ(noisy.noise.p_readout_1to0, 0.1);
  EXPECT_FALSE(noisy.mitigate);
  EXPECT_EQ(cfg.sweep.methods[1].window, 4u);
  EXPECT_EQ(cfg.timeseries().times.size(), 11u);
}

TEST(ParseConfig, UnknownKeyNamesKeyAndLine) {
  std::string what;
  EXPECT_EQ(config_error_line("L = 4\n\nfoo = 1\n", &what), 3);
  EXPECT_NE(what.find("foo"), std::string::npos) << what;
  EXPECT_EQ(config_error_line("[method]\nkind = exact\nL = 4\n", &what), 3);
}

TEST(ParseConfig, RejectsMalformedInput) {
  EXPECT_EQ(config_error_line("L = 4\nL = 5\n"), 2);
  EXPECT_EQ(config_error_line("L = four\n"), 1);
  EXPECT_EQ(config_error_line("w_grid = 1,,2\n"), 1);
  EXPECT_EQ(config_error_line("master_seed = -3\n"), 1);
  EXPECT_EQ(config_error_line("[methods]\n"), 1);
  EXPECT_EQ(config_error_line("L 4\n"), 1);
  EXPECT_EQ(config_error_line("[method]\nkind = magic\n"), 2);
  EXPECT_EQ(config_error_line("keep_raw = maybe\n"), 1);
}

TEST(ParseConfig, InvalidValuesBecomeConfigErrors) {
  EXPECT_THROW(parse("L = 1\n"), ConfigError);
  EXPECT_THROW(parse("[method]\nkind = trotter\norder = 3\n"), ConfigError);
  EXPECT_THROW(parse("[method]\nkind = noisy\np_cnot = 1.5\n"), ConfigError);
}

TEST(LoadConfig, MissingFile) {
  EXPECT_THROW(load_config("/nonexistent/locprobe.cfg"), std::exception);
}

TEST(FormatNumber, NineDigitsAndDotDecimal) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_number(10.0), "10");
  EXPECT_EQ(format_number(1234567891.0), "1.23456789e+09");
  const char* old = std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  EXPECT_EQ(format_number(2.25), "2.25");
  if (old) std::setlocale(LC_NUMERIC, "C");
}

TEST(WriteSweepCsv, HeaderAndRows) {
  SweepResult res;
  res.rows.push_back({0.5, "exact", 3, 4.25, 0.5, 0.75, 0.125, {}, {}});
  std::ostringstream out;
  write_sweep_csv(out, res);
  EXPECT_EQ(out.str(),
            "w,method,mean_mz,std_mz,mean_z2,std_z2,n_realizations\n"
            "0.5,exact,4.25,0.5,0.75,0.125,3\n");
}

TEST(WriteTimeseriesCsv, OneRowPerSampleAndTime) {
  TimeseriesSample s{1.0, 0, {0.1, 0.2}, {5, 4}, {1, 0.5}};
  const std::vector<double> times{0, 0.5};
  std::ostringstream out;
  write_timeseries_csv(out, times, {s});
  EXPECT_EQ(out.str(), "w,sample,t,mz,z2\n1,0,0,5,1\n1,0,0.5,4,0.5\n");
}

TEST(WriteSpectraCsv, OneRowPerBasisState) {
  SpectraSample s{10.0, 2, {0.9, 0.1}, {0.9, 0.05}};
  std::ostringstream out;
  write_spectra_csv(out, {s});
  EXPECT_EQ(out.str(), "w,sample,k,b2,c2\n10,2,0,0.9,0.9\n10,2,1,0.1,0.05\n");
}

TEST(Cli, GatecountMatchesTheFormula) {
  auto r = invoke({"gatecount", "--p", "1", "--m", "10"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "single=290 two=80\n");
  r = invoke({"gatecount", "--p", "2", "--m", "10"});
  EXPECT_EQ(r.out, "single=315 two=80\n");
  r = invoke({"gatecount", "--p", "1", "--m", "15"});
  EXPECT_EQ(r.out, "single=435 two=120\n");
}

TEST(Cli, BadArgumentsExitWithConfigCode) {
  auto r = invoke({"gatecount", "--p", "1", "--m", "0"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("--m"), std::string::npos) << r.err;
  r = invoke({"gatecount", "--p", "1"});
  EXPECT_EQ(r.code, kExitConfig);
  r = invoke({"sweep", "--config", "/nonexistent/x.cfg"});
  EXPECT_NE(r.code, kExitOk);
}

TEST(Cli, UnknownConfigKeyExitsWithConfigCode) {
  const auto dir = scratch_dir("badkey");
  std::ofstream(dir / "bad.cfg") << "L = 3\nbogus = 1\n";
  const auto r = invoke({"sweep", "--config", (dir / "bad.cfg").string(), "--out", dir.string()});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("bogus"), std::string::npos) << r.err;
}

TEST(Cli, MinimalSweepWritesOneRow) {
  const auto dir = scratch_dir("minimal");
  std::ofstream(dir / "min.cfg") << "L = 3\nw_grid = 2\nn_realizations = 5\n";
  const auto r =
      invoke({"sweep", "--config", (dir / "min.cfg").string(), "--out", dir.string(), "--svg"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream csv(slurp(dir / "sweep.csv"));
  std::string line;
  int rows = 0;
  std::getline(csv, line);
  EXPECT_EQ(line, "w,method,mean_mz,std_mz,mean_z2,std_z2,n_realizations");
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 1);
  EXPECT_EQ(slurp(dir / "sweep.svg").rfind("<svg", 0), 0u);
}

TEST(Cli, TimeseriesAndSpectraWriteTheirFiles) {
  const auto dir = scratch_dir("series");
  std::ofstream(dir / "s.cfg") << "L = 3\nw_grid = 1, 10\nn_samples = 2\nn_times = 5\n";
  for (const std::string cmd : {"timeseries", "spectra"}) {
    const auto r = invoke({cmd, "--config", (dir / "s.cfg").string(), "--out", dir.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(fs::exists(dir / (cmd + ".csv")));
  }
  std::istringstream csv(slurp(dir / "timeseries.csv"));
  std::string line;
  int rows = -1;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 2 * 2 * 5);
}

TEST(Cli, GoldenSweepIsByteIdentical) {
  const fs::path data(LOCPROBE_TEST_DATA_DIR);
  const auto dir = scratch_dir("golden");
  const auto r = invoke({"sweep", "--config", (data / "golden_sweep.cfg").string(), "--out",
                         dir.string(), "--threads", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir / "sweep.csv"), slurp(data / "golden_sweep.csv"));
}

}  // namespace
}  // namespace locprobe::cli
