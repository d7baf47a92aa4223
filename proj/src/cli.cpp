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
#include "hapsplan/optimizer.hpp"
#include "hapsplan/report.hpp"
#include "hapsplan/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace hapsplan {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

ExperimentConfig config_of(const RunOptions &o) {
  if (o.config_path.empty()) {
    return ExperimentConfig{};
  }
  if (!fs::exists(o.config_path)) {
    throw Error(Errc::io, "config file not found: " + o.config_path);
  }
  return load_config(o.config_path);
}

void check_format(const std::string &format) {
  if (format != "json" && format != "csv") {
    throw Error(Errc::config, "--format: expected csv or json, got \"" + format + "\"");
  }
}

std::ofstream open_out(const fs::path &path) {
  if (path.has_parent_path() && !fs::exists(path.parent_path())) {
    throw Error(Errc::io, "output directory does not exist: " + path.parent_path().string());
  }
  std::ofstream f(path);
  if (!f) {
    throw Error(Errc::io, "cannot write " + path.string());
  }
  return f;
}

// foo.csv -> foo_<suffix>.csv
fs::path sibling(const fs::path &path, const std::string &suffix) {
  fs::path p = path;
  const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
  p.replace_filename(p.stem().string() + "_" + suffix + ext);
  return p;
}

void emit(const RunOptions &o, std::ostream &out,
          const std::function<void(std::ostream &)> &write) {
  if (o.out.empty()) {
    write(out);
    return;
  }
  std::ofstream f = open_out(o.out);
  write(f);
  if (!f) {
    throw Error(Errc::io, "write failed: " + o.out);
  }
}

void write_solution(const RunOptions &o, const SolveResult &result, const Scenario &scenario,
                    std::ostream &out) {
  if (o.format == "json") {
    emit(o, out, [&](std::ostream &s) {
      s << solve_artifact(result, scenario, o.seed).dump(2) << '\n';
    });
    return;
  }
  if (o.out.empty()) {
    write_summary_csv(out, result, scenario, o.seed);
    return;
  }
  emit(o, out, [&](std::ostream &s) { write_user_csv(s, result.best, scenario); });
  std::ofstream summary = open_out(sibling(o.out, "summary"));
  write_summary_csv(summary, result, scenario, o.seed);
  std::ofstream trace = open_out(sibling(o.out, "trace"));
  write_trace_csv(trace, result.trace);
}

void report_line(std::ostream &err, const ParetoSolution &s, int n_users) {
  err << "kappa=" << s.kappa << " L_cs=" << s.split.cs << " L_uav=" << s.split.uav
      << " R*=" << s.radius << " U_haps=" << s.u_haps << "/" << n_users << " N_uav=" << s.n_uav
      << " outage=" << s.outage_users.size() << '\n';
}

int guarded(std::ostream &err, const std::function<int()> &body) {
  try {
    return body();
  } catch (const Error &e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

} // namespace

int cmd_solve(const RunOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    check_format(o.format);
    const ExperimentConfig config = config_of(o);
    const Scenario scenario = make_scenario(config, o.seed);
    const SolveResult result = solve(scenario, config.optimizer, o.seed);
    write_solution(o, result, scenario, out);
    report_line(err, result.best, scenario.user_count());
    return result.best.outage_users.empty() ? kExitOk : kExitOutage;
  });
}

int cmd_baseline(const RunOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    check_format(o.format);
    const ExperimentConfig config = config_of(o);
    const Scenario scenario = make_scenario(config, o.seed);
    if (o.regime != "all") {
      const auto regime = parse_regime(o.regime);
      if (!regime) {
        throw Error(Errc::config, "--regime: expected uav-only, haps-only, equal-split, "
                                  "optimized or all, got \"" + o.regime + "\"");
      }
      const SolveResult result = run_baseline(*regime, scenario, config.optimizer, o.seed);
      write_solution(o, result, scenario, out);
      report_line(err, result.best, scenario.user_count());
      return result.best.outage_users.empty() ? kExitOk : kExitOutage;
    }

    std::vector<CompareRow> rows;
    for (Regime r : {Regime::uav_only, Regime::haps_only, Regime::equal_split,
                     Regime::optimized}) {
      rows.push_back({r, run_baseline(r, scenario, config.optimizer, o.seed).best});
    }
    if (o.format == "csv") {
      emit(o, out, [&](std::ostream &s) { write_compare_csv(s, rows, scenario); });
    } else {
      ordered_json table = ordered_json::array();
      for (const CompareRow &r : rows) {
        ordered_json sol = to_json(r.solution);
        table.push_back({{"regime", to_string(r.regime)}, {"solution", sol}});
      }
      emit(o, out, [&](std::ostream &s) {
        s << ordered_json{{"seed", o.seed}, {"regimes", table}}.dump(2) << '\n';
      });
    }
    if (!o.out.empty()) {
      write_compare_csv(err, rows, scenario);
    }
    return kExitOk;
  });
}

int cmd_sweep(const RunOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    if (o.spec_path.empty()) {
      throw Error(Errc::config, "--spec: a sweep spec path is required");
    }
    if (!fs::exists(o.spec_path)) {
      throw Error(Errc::io, "sweep spec not found: " + o.spec_path);
    }
    SweepSpec spec = load_sweep_spec(o.spec_path);
    if (o.threads > 0) {
      spec.threads = o.threads;
    }
    const SweepResult result = run_sweep(spec);
    emit(o, out, [&](std::ostream &s) { write_sweep_csv(s, result); });
    int failed = 0;
    for (const SweepRow &r : result.rows) {
      failed += r.error.empty() ? 0 : 1;
    }
    err << result.rows.size() << " cells, " << failed << " failed\n";
    return kExitOk;
  });
}

int cmd_validate(const RunOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    if (o.config_path.empty()) {
      throw Error(Errc::config, "--config: a config path is required");
    }
    const ExperimentConfig config = config_of(o);
    const Scenario scenario = make_scenario(config, o.seed);
    const std::vector<Violation> problems = validate(scenario);
    for (const Violation &v : problems) {
      err << v.field << ": " << v.message << '\n';
    }
    if (!problems.empty()) {
      return kExitError;
    }
    out << "ok: " << scenario.user_count() << " users, M = " << scenario.ris_elements
        << ", r0 = " << scenario.min_rate_bps << " bps\n";
    return kExitOk;
  });
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Planning engine for HAPS-RIS assisted multi-UAV networks", "hapsplan"};
  app.require_subcommand(1);
  RunOptions o;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--config", o.config_path, "Scenario config (JSON)");
    cmd->add_option("--seed", o.seed, "Seed for user layout and k-means restarts");
    cmd->add_option("--out", o.out, "Output path (default: stdout)");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  CLI::App *solve_cmd = app.add_subcommand("solve", "Optimize the bandwidth split");
  add_common(solve_cmd);
  CLI::App *baseline_cmd = app.add_subcommand("baseline", "Evaluate a fixed regime");
  add_common(baseline_cmd);
  baseline_cmd->add_option("--regime", o.regime,
                           "uav-only, haps-only, equal-split, optimized or all");
  CLI::App *sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep to CSV");
  sweep_cmd->add_option("--spec", o.spec_path, "Sweep spec (JSON)")->required();
  sweep_cmd->add_option("--out", o.out, "CSV output path (default: stdout)");
  sweep_cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  CLI::App *validate_cmd = app.add_subcommand("validate", "Check a config file");
  validate_cmd->add_option("--config", o.config_path, "Scenario config (JSON)")->required();
  validate_cmd->add_option("--seed", o.seed, "Seed for the user layout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  if (solve_cmd->parsed()) {
    return cmd_solve(o, out, err);
  }
  if (baseline_cmd->parsed()) {
    return cmd_baseline(o, out, err);
  }
  if (sweep_cmd->parsed()) {
    return cmd_sweep(o, out, err);
  }
  return cmd_validate(o, out, err);
}

} // namespace hapsplan
