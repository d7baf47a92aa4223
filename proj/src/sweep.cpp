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

#include "hapsplan/sweep.hpp"

#include "hapsplan/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <thread>

namespace hapsplan {

namespace {

using nlohmann::ordered_json;

double to_db_or_nan(double linear) {
  return linear > 0.0 ? linear_to_db(linear) : std::numeric_limits<double>::quiet_NaN();
}

bool same_number(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> rank(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) {
      ++j;
    }
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      rank[order[k]] = r;
    }
    i = j + 1;
  }
  return rank;
}

} // namespace

std::string_view to_string(SweepVariable variable) {
  switch (variable) {
  case SweepVariable::ris_elements: return "M";
  case SweepVariable::cs_power_dbm: return "P_cs";
  case SweepVariable::min_rate_bps: return "r0";
  case SweepVariable::kappa: return "kappa";
  }
  return "unknown";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  for (SweepVariable v : {SweepVariable::ris_elements, SweepVariable::cs_power_dbm,
                          SweepVariable::min_rate_bps, SweepVariable::kappa}) {
    if (to_string(v) == name) {
      return v;
    }
  }
  return std::nullopt;
}

std::vector<std::string> validate(const SweepSpec &spec) {
  std::vector<std::string> out;
  if (spec.grid.empty()) {
    out.push_back("grid: must be non-empty");
  }
  const bool up = std::is_sorted(spec.grid.begin(), spec.grid.end(), std::less_equal<>());
  const bool down = std::is_sorted(spec.grid.begin(), spec.grid.end(), std::greater_equal<>());
  if (!(up || down) || std::adjacent_find(spec.grid.begin(), spec.grid.end()) != spec.grid.end()) {
    out.push_back("grid: must be strictly monotone");
  }
  if (spec.replications < 1) {
    out.push_back("replications: must be >= 1");
  }
  if (spec.threads < 0) {
    out.push_back("threads: must be >= 0");
  }
  for (double v : spec.grid) {
    if (std::isnan(v)) {
      out.push_back("grid: NaN entry");
    } else if (spec.variable == SweepVariable::ris_elements && (v < 1.0 || v != std::floor(v))) {
      out.push_back("grid: M values must be positive integers");
    } else if ((spec.variable == SweepVariable::min_rate_bps ||
                spec.variable == SweepVariable::kappa) &&
               v < 0.0) {
      out.push_back("grid: values must be >= 0");
    }
  }
  return out;
}

SweepSpec parse_sweep_spec(const ordered_json &doc, const std::string &base_dir) {
  auto fail = [](const std::string &field, const std::string &msg) -> void {
    throw Error(Errc::config, field + ": " + msg);
  };
  if (!doc.is_object()) {
    fail("<root>", "expected a JSON object");
  }
  for (const auto &item : doc.items()) {
    static const std::vector<std::string> known{"variable", "grid",    "regime",     "replications",
                                                "threads",  "config", "config_path"};
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      fail(item.key(), "unknown key");
    }
  }
  SweepSpec spec;
  if (!doc.contains("variable") || !doc.at("variable").is_string()) {
    fail("variable", "required, one of M, P_cs, r0, kappa");
  }
  const auto variable = parse_sweep_variable(doc.at("variable").get<std::string>());
  if (!variable) {
    fail("variable", "must be one of M, P_cs, r0, kappa");
  }
  spec.variable = *variable;
  if (!doc.contains("grid") || !doc.at("grid").is_array()) {
    fail("grid", "required array of values");
  }
  for (const ordered_json &v : doc.at("grid")) {
    if (v.is_string() && v.get<std::string>() == "inf") {
      spec.grid.push_back(std::numeric_limits<double>::infinity());
    } else if (v.is_number()) {
      spec.grid.push_back(v.get<double>());
    } else {
      fail("grid", "entries must be numbers");
    }
  }
  if (doc.contains("regime")) {
    const auto regime = parse_regime(doc.at("regime").get<std::string>());
    if (!regime) {
      fail("regime", "must be one of uav-only, haps-only, equal-split, optimized");
    }
    spec.regime = *regime;
  }
  if (doc.contains("replications")) {
    if (!doc.at("replications").is_number_integer()) {
      fail("replications", "expected an integer");
    }
    spec.replications = doc.at("replications").get<int>();
  }
  if (doc.contains("threads")) {
    if (!doc.at("threads").is_number_integer()) {
      fail("threads", "expected an integer");
    }
    spec.threads = doc.at("threads").get<int>();
  }
  if (doc.contains("config") && doc.contains("config_path")) {
    fail("config", "give either config or config_path, not both");
  }
  if (doc.contains("config")) {
    spec.base = parse_config(doc.at("config"));
  } else if (doc.contains("config_path")) {
    std::filesystem::path p = doc.at("config_path").get<std::string>();
    if (p.is_relative()) {
      p = std::filesystem::path(base_dir) / p;
    }
    spec.base = load_config(p);
  }
  const std::vector<std::string> problems = validate(spec);
  if (!problems.empty()) {
    throw Error(Errc::config, problems.front());
  }
  return spec;
}

SweepSpec load_sweep_spec(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io, "cannot open sweep spec " + path);
  }
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(Errc::config, path + ": invalid JSON: " + e.what());
  }
  return parse_sweep_spec(doc, std::filesystem::path(path).parent_path().string());
}

ExperimentConfig apply_sweep_value(const ExperimentConfig &base, SweepVariable variable,
                                   double value) {
  ExperimentConfig c = base;
  switch (variable) {
  case SweepVariable::ris_elements:
    c.scenario.ris_elements = static_cast<std::int64_t>(value);
    break;
  case SweepVariable::cs_power_dbm:
    c.scenario.cs_power_w = dbm_to_watts(value);
    break;
  case SweepVariable::min_rate_bps:
    c.scenario.min_rate_bps = value;
    break;
  case SweepVariable::kappa:
    c.optimizer.kappa_grid = {value};
    c.optimizer.max_outer = 1;
    break;
  }
  return c;
}

bool SweepRow::same_result(const SweepRow &o) const {
  return same_number(value, o.value) && seed == o.seed && u_haps == o.u_haps &&
         same_number(coverage_pct, o.coverage_pct) && n_uav == o.n_uav &&
         same_number(lambda_true_db, o.lambda_true_db) &&
         same_number(lambda_upp_db, o.lambda_upp_db) && same_number(r_star, o.r_star) &&
         outage_count == o.outage_count && error == o.error;
}

SweepRow run_cell(const SweepSpec &spec, double value, std::uint64_t seed) {
  SweepRow row;
  row.value = value;
  row.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const ExperimentConfig config = apply_sweep_value(spec.base, spec.variable, value);
    const Scenario scenario = make_scenario(config, seed);
    // A kappa sweep evaluates the pinned kappa through the full scan.
    const Regime regime = spec.variable == SweepVariable::kappa ? Regime::optimized : spec.regime;
    const SolveResult result = run_baseline(regime, scenario, config.optimizer, seed);
    const ParetoSolution &s = result.best;
    row.u_haps = s.u_haps;
    row.coverage_pct = 100.0 * s.u_haps / scenario.user_count();
    row.n_uav = s.n_uav;
    row.lambda_true_db = to_db_or_nan(s.lambda_true);
    row.lambda_upp_db = to_db_or_nan(s.lambda_upp);
    row.r_star = s.radius;
    row.outage_count = static_cast<int>(s.outage_users.size());
  } catch (const std::exception &e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.u_haps = row.n_uav = row.outage_count = -1;
    row.coverage_pct = row.lambda_true_db = row.lambda_upp_db = row.r_star = nan;
    row.error = e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

SweepResult run_sweep(const SweepSpec &spec) {
  const std::vector<std::string> problems = validate(spec);
  if (!problems.empty()) {
    throw Error(Errc::invalid_argument, "run_sweep: " + problems.front());
  }
  struct Cell {
    double value;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (double v : spec.grid) {
    for (int r = 0; r < spec.replications; ++r) {
      cells.push_back({v, static_cast<std::uint64_t>(r)});
    }
  }
  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      rows[i] = run_cell(spec, cells[i].value, cells[i].seed);
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_threads =
      std::min<std::size_t>(spec.threads > 0 ? static_cast<std::size_t>(spec.threads) : hw,
                            cells.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) {
    return a.value != b.value ? a.value < b.value : a.seed < b.seed;
  });
  return {spec.variable, std::move(rows)};
}

bool full_coverage(const Scenario &scenario, CoverageMode mode, const OptimizerConfig &config,
                   std::uint64_t seed) {
  if (mode == CoverageMode::haps_only) {
    const SolveResult r = run_baseline(Regime::haps_only, scenario, config, seed);
    return r.best.outage_users.empty();
  }
  for (double kappa : config.grid()) {
    const KappaPoint p = evaluate_kappa(kappa, scenario, config, seed);
    if (p.trace.outage == 0 && p.trace.n_uav <= 1) {
      return true;
    }
  }
  return false;
}

RisSearch min_ris_for_full_coverage(double min_rate_bps, CoverageMode mode,
                                    const ExperimentConfig &base, std::uint64_t seed,
                                    std::int64_t m_max) {
  if (!(min_rate_bps > 0.0)) {
    throw Error(Errc::invalid_argument, "min_ris_for_full_coverage: r0 must be > 0");
  }
  Scenario scenario = make_scenario(base, seed);
  scenario.min_rate_bps = min_rate_bps;
  RisSearch out;
  auto feasible = [&](std::int64_t m) {
    scenario.ris_elements = m;
    ++out.evaluations;
    return full_coverage(scenario, mode, base.optimizer, seed);
  };

  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (!feasible(hi)) {
    lo = hi;
    if (hi >= m_max) {
      throw Error(Errc::not_achievable,
                  "full coverage not reached with M = " + std::to_string(m_max) + " elements");
    }
    hi = std::min(hi * 2, m_max);
  }
  // lo is infeasible (or 0), hi is feasible.
  while (hi - lo > std::max<std::int64_t>(1, hi / 100)) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.m_min = hi;
  out.lower = lo;
  return out;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(Errc::invalid_argument, "spearman: need two equal-length samples of size >= 2");
  }
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return sxy / std::sqrt(sxx * syy);
}

} // namespace hapsplan
