// hapsplan -- planning engine for HAPS-RIS assisted multi-UAV networks
// Copyright (C) 2026 The hapsplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "hapsplan/cli.hpp"
#include "hapsplan/config.hpp"
#include "hapsplan/error.hpp"
#include "hapsplan/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hapsplan;
namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

class TempDir {
public:
  TempDir() {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("hapsplan_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string &name) const { return path_ / name; }

private:
  fs::path path_;
};

void write_file(const fs::path &p, const std::string &text) { std::ofstream(p) << text; }

std::string read_file(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const std::string &text) { return text.substr(0, text.find('\n')); }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string> &args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kDefaultConfig = std::string(HAPSPLAN_SOURCE_DIR) + "/configs/paper_default.json";

} // namespace

TEST(Config, BundledDefaultMatchesBuiltInDefaults) {
  const ExperimentConfig c = load_config(kDefaultConfig);
  const ExperimentConfig d;
  EXPECT_EQ(c.user_count, 20);
  EXPECT_FALSE(c.explicit_users);
  EXPECT_DOUBLE_EQ(c.scenario.radio.carrier_hz, d.scenario.radio.carrier_hz);
  EXPECT_DOUBLE_EQ(c.scenario.radio.gain_cs, d.scenario.radio.gain_cs);
  EXPECT_DOUBLE_EQ(c.scenario.radio.noise_psd_w_per_hz, d.scenario.radio.noise_psd_w_per_hz);
  EXPECT_DOUBLE_EQ(c.scenario.cs_power_w, d.scenario.cs_power_w);
  EXPECT_DOUBLE_EQ(c.scenario.uav_power_w, d.scenario.uav_power_w);
  EXPECT_EQ(c.scenario.ris_elements, d.scenario.ris_elements);
  EXPECT_EQ(c.scenario.cs_pos, d.scenario.cs_pos);
  EXPECT_EQ(c.scenario.haps_pos, d.scenario.haps_pos);
  EXPECT_EQ(c.optimizer.grid(), d.optimizer.grid());
}

TEST(Config, DiagnosticsNameTheField) {
  auto message = [](const std::string &text) {
    try {
      parse_config(ordered_json::parse(text));
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), Errc::config);
      return std::string(e.what());
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(message(R"({"bogus": 1})"), "bogus: unknown key");
  EXPECT_EQ(message(R"({"M": "many"})").rfind("M: ", 0), 0u);
  EXPECT_EQ(message(R"({"eta1": 40})"), "eta2: eta2 >= eta1");
  EXPECT_EQ(message(R"({"optimizer": {"delta_R_m": -5}})").rfind("optimizer.delta_R_m", 0), 0u);
  EXPECT_EQ(message(R"({"optimizer": {"typo": 1}})"), "optimizer.typo: unknown key");
  EXPECT_EQ(message(R"({"users": [[0, 0], [600, 0]]})").rfind("users: user outside", 0), 0u);
}

TEST(Config, ExplicitUsersAndInfiniteKappa) {
  const ExperimentConfig c = parse_config(ordered_json::parse(
      R"({"users": [[0, 0], {"x": 200, "y": 100}], "optimizer": {"kappa_grid": [1, "inf"]}})"));
  EXPECT_TRUE(c.explicit_users);
  ASSERT_EQ(c.scenario.users.size(), 2u);
  EXPECT_EQ(c.scenario.users[1], (Point3{200, 100, 0}));
  EXPECT_TRUE(std::isinf(c.optimizer.grid().back()));
  const Scenario s = make_scenario(c, 99);
  EXPECT_EQ(s.users, c.scenario.users);
  // The serialized form parses back to the same settings.
  const ExperimentConfig again = parse_config(to_json(c));
  EXPECT_EQ(again.scenario.users, c.scenario.users);
  EXPECT_EQ(again.optimizer.grid().size(), 2u);
  EXPECT_NEAR(again.scenario.radio.gain_cs, c.scenario.radio.gain_cs, 1e-9);
}

TEST(Artifact, JsonRoundTripIsExact) {
  Scenario s = default_scenario(3);
  s.min_rate_bps = 2.5e7;
  s.ris_elements = 150000;
  const SolveResult r = solve(s, OptimizerConfig{}, 3);
  ASSERT_GT(r.best.n_uav, 0);
  const ordered_json doc = ordered_json::parse(solve_artifact(r, s, 3).dump());
  const SolveResult back = solve_result_from_artifact(doc);
  EXPECT_TRUE(back.best == r.best);
  EXPECT_EQ(back.trace, r.trace);
  EXPECT_EQ(back.early_stopped, r.early_stopped);
}

TEST(Artifact, InfiniteKappaAndMissingBoundSurvive) {
  Scenario s = default_scenario(1);
  s.radio.pathloss_exponent = 2.5;
  OptimizerConfig c;
  c.kappa_grid = {0.0, std::numeric_limits<double>::infinity()};
  c.max_outer = 2;
  const SolveResult r = solve(s, c, 1);
  const ordered_json doc = ordered_json::parse(solve_artifact(r, s, 1).dump());
  EXPECT_EQ(doc["trace"][1]["kappa"], "inf");
  EXPECT_TRUE(doc["trace"][0]["lambda_upp"].is_null());
  const SolveResult back = solve_result_from_artifact(doc);
  EXPECT_EQ(back.trace, r.trace);
  EXPECT_TRUE(back.best == r.best);
}

TEST(Csv, GoldenHeaders) {
  Scenario s = default_scenario(0);
  const SolveResult r = solve(s, OptimizerConfig{}, 0);
  std::ostringstream users, summary, trace, sweep, compare;
  write_user_csv(users, r.best, s);
  write_summary_csv(summary, r, s, 0);
  write_trace_csv(trace, r.trace);
  write_sweep_csv(sweep, SweepResult{});
  write_compare_csv(compare, {}, s);
  EXPECT_EQ(first_line(users.str()),
            "user,x_m,y_m,zone,server,uav,n_subcarriers,subcarriers,power_w,ris_first,ris_count,"
            "rate_bps,meets_r0");
  EXPECT_EQ(first_line(summary.str()),
            "seed,kappa_opt,L_cs,L_uav,R_star_m,U_haps,coverage_pct,N_uav,N_uav_init,outage_count,"
            "lambda_true,lambda_true_dB,lambda_upp,lambda_upp_dB,early_stopped");
  EXPECT_EQ(first_line(trace.str()),
            "kappa,L_cs,L_uav,R_star_m,U_haps,N_uav,outage_count,lambda_true_dB,lambda_upp_dB,"
            "radius_steps,uav_steps,lloyd_iterations");
  EXPECT_EQ(sweep.str(),
            "value,seed,U_haps,coverage_pct,N_uav,lambda_true_dB,lambda_upp_dB,R_star,"
            "outage_count,wall_ms,error\n");
  EXPECT_EQ(compare.str(), "regime,kappa,U_haps,coverage_pct,N_uav,outage,lambda_upp_dB\n");
  // One row per user, one per kappa.
  const std::string u = users.str();
  const std::string t = trace.str();
  EXPECT_EQ(std::count(u.begin(), u.end(), '\n'), 21);
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), static_cast<long>(r.trace.size()) + 1);
}

TEST(Cli, SolveWritesJsonArtifact) {
  TempDir dir;
  const CliRun run = cli({"solve", "--config", kDefaultConfig, "--seed", "0", "--out",
                          (dir / "sol.json").string(), "--format", "json"});
  EXPECT_EQ(run.code, 0) << run.err;
  const ordered_json doc = ordered_json::parse(read_file(dir / "sol.json"));
  for (const char *key : {"kappa_opt", "U_haps", "N_uav", "outage_count", "R_star_m"}) {
    EXPECT_TRUE(doc["summary"].contains(key)) << key;
  }
  EXPECT_EQ(doc["schema"], "hapsplan.solution/1");
}

TEST(Cli, SolveCsvWritesThreeFiles) {
  TempDir dir;
  const CliRun run = cli({"solve", "--seed", "1", "--out", (dir / "run.csv").string(),
                          "--format", "csv"});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_TRUE(fs::exists(dir / "run.csv"));
  EXPECT_TRUE(fs::exists(dir / "run_summary.csv"));
  EXPECT_TRUE(fs::exists(dir / "run_trace.csv"));
}

TEST(Cli, MissingConfigNamesThePath) {
  const CliRun run = cli({"solve", "--config", "/nonexistent/cfg.json"});
  EXPECT_EQ(run.code, 1);
  EXPECT_NE(run.err.find("/nonexistent/cfg.json"), std::string::npos);
}

TEST(Cli, BadFieldExitsOneWithFieldName) {
  TempDir dir;
  write_file(dir / "bad.json", R"({"P_cs_dbm": "loud"})");
  const CliRun run = cli({"solve", "--config", (dir / "bad.json").string()});
  EXPECT_EQ(run.code, 1);
  EXPECT_NE(run.err.find("P_cs_dbm"), std::string::npos);
}

TEST(Cli, ImpossibleRateExitsTwoWithFullOutage) {
  TempDir dir;
  write_file(dir / "hard.json", R"({"r0_bps": 1e12})");
  const CliRun run = cli({"solve", "--config", (dir / "hard.json").string(), "--out",
                          (dir / "out.json").string()});
  EXPECT_EQ(run.code, 2) << run.err;
  const ordered_json doc = ordered_json::parse(read_file(dir / "out.json"));
  EXPECT_EQ(doc["summary"]["outage_count"], 20);
}

TEST(Cli, BaselineAllPrintsFourRegimes) {
  const CliRun run = cli({"baseline", "--regime", "all", "--seed", "2", "--format", "csv"});
  EXPECT_EQ(run.code, 0) << run.err;
  std::istringstream in(run.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[1].rfind("uav-only,0,0,0,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("haps-only,inf,", 0), 0u);
  EXPECT_EQ(lines[3].rfind("equal-split,1,", 0), 0u);
  EXPECT_EQ(lines[4].rfind("optimized,", 0), 0u);
}

TEST(Cli, BaselineRejectsUnknownRegime) {
  const CliRun run = cli({"baseline", "--regime", "hybrid"});
  EXPECT_EQ(run.code, 1);
  EXPECT_NE(run.err.find("--regime"), std::string::npos);
}

TEST(Cli, SweepWritesSortedCsv) {
  TempDir dir;
  write_file(dir / "spec.json",
             R"({"variable": "M", "grid": [100000, 350000], "regime": "haps-only",
                 "replications": 2, "config_path": ")" + kDefaultConfig + R"("})");
  const CliRun run = cli({"sweep", "--spec", (dir / "spec.json").string(), "--out",
                          (dir / "sweep.csv").string(), "--threads", "2"});
  EXPECT_EQ(run.code, 0) << run.err;
  std::istringstream in(read_file(dir / "sweep.csv"));
  std::string line;
  std::getline(in, line);
  std::vector<std::string> keys;
  while (std::getline(in, line)) {
    keys.push_back(line.substr(0, line.find(',', line.find(',') + 1)));
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"100000,0", "100000,1", "350000,0", "350000,1"}));
}

TEST(Cli, ValidateConfig) {
  TempDir dir;
  EXPECT_EQ(cli({"validate", "--config", kDefaultConfig}).code, 0);
  write_file(dir / "bad.json", R"({"mu": 3})");
  const CliRun run = cli({"validate", "--config", (dir / "bad.json").string()});
  EXPECT_EQ(run.code, 1);
  EXPECT_NE(run.err.find("mu"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"solve", "--format", "xml"}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}
