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

#include "hapsplan/optimizer.hpp"

#include "hapsplan/error.hpp"
#include "hapsplan/links.hpp"
#include "hapsplan/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace hapsplan {

namespace {

constexpr std::uint64_t kPlanStream = 1;
constexpr std::uint64_t kKmeansStream = 0x4b4d00;

bool same_number(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

std::uint64_t kmeans_seed(std::uint64_t seed, int k) {
  return derive_seed(seed, kKmeansStream + static_cast<std::uint64_t>(k));
}

// Rates of `users` under `plan`; true when all meet r0.
bool zone_feasible(const std::vector<int> &users, const AllocationPlan &plan,
                   const LinkEvaluator &links, const Scenario &scenario,
                   std::vector<int> *violators) {
  bool ok = true;
  for (int u : users) {
    const UserAllocation &a = plan.users[static_cast<std::size_t>(u)];
    const bool served = a.server != Server::none && !a.subcarriers.empty();
    if (!served || links.user_rate(u).rate_bps < scenario.min_rate_bps) {
      ok = false;
      if (violators == nullptr) {
        return false;
      }
      violators->push_back(u);
    }
  }
  return ok;
}

double lambda_bound(const UavDeployment &deployment, const Scenario &scenario, int initial) {
  if (deployment.n_uav() == 0) {
    return 0.0;
  }
  try {
    return pathloss_upper_bound(deployment, scenario, initial);
  } catch (const Error &e) {
    if (e.code() == Errc::invalid_alpha) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    throw;
  }
}

} // namespace

std::vector<double> default_kappa_grid(int entries) {
  std::vector<double> grid;
  for (int q = 0; q < entries; ++q) {
    grid.push_back(1.0 + 0.5 * q);
  }
  return grid;
}

std::vector<double> OptimizerConfig::grid() const {
  std::vector<double> g = kappa_grid.empty() ? default_kappa_grid(max_outer) : kappa_grid;
  if (static_cast<int>(g.size()) > max_outer) {
    g.resize(static_cast<std::size_t>(std::max(max_outer, 0)));
  }
  return g;
}

std::vector<std::string> validate(const OptimizerConfig &c) {
  std::vector<std::string> out;
  if (!(c.radius_step > 0.0)) {
    out.push_back("delta_R_m: must be > 0");
  }
  if (c.uav_step < 1) {
    out.push_back("delta_N: must be >= 1");
  }
  if (!(c.epsilon > 0.0)) {
    out.push_back("epsilon: must be > 0");
  }
  if (c.max_outer < 1) {
    out.push_back("Q_max: must be >= 1");
  }
  if (c.radius_iterations < 0 || c.uav_iterations < 0) {
    out.push_back("T, T_prime: must be >= 0 (0 = auto)");
  }
  if (c.initial_uavs && *c.initial_uavs < 1) {
    out.push_back("N_uav_init: must be >= 1 or \"auto\"");
  }
  if (c.kmeans.max_iter < 1 || c.kmeans.restarts < 1) {
    out.push_back("kmeans_max_iter, kmeans_restarts: must be >= 1");
  }
  for (std::size_t q = 0; q < c.kappa_grid.size(); ++q) {
    const double k = c.kappa_grid[q];
    if (std::isnan(k) || k < 0.0) {
      out.push_back("kappa_grid: entries must be >= 0");
    }
    if (q > 0 && !(k > c.kappa_grid[q - 1])) {
      out.push_back("kappa_grid: must be strictly increasing");
    }
  }
  return out;
}

bool ParetoSolution::operator==(const ParetoSolution &o) const {
  if (rate_bps.size() != o.rate_bps.size()) {
    return false;
  }
  for (std::size_t i = 0; i < rate_bps.size(); ++i) {
    if (!same_number(rate_bps[i], o.rate_bps[i])) {
      return false;
    }
  }
  return same_number(kappa, o.kappa) && split == o.split && radius == o.radius &&
         n_uav == o.n_uav && initial_uavs == o.initial_uavs && u_haps == o.u_haps &&
         outage_users == o.outage_users && same_number(lambda_true, o.lambda_true) &&
         same_number(lambda_upp, o.lambda_upp) && deployment == o.deployment && plan == o.plan;
}

bool KappaTrace::operator==(const KappaTrace &o) const {
  return same_number(kappa, o.kappa) && l_cs == o.l_cs && l_uav == o.l_uav &&
         radius == o.radius && u_haps == o.u_haps && n_uav == o.n_uav && outage == o.outage &&
         same_number(lambda_true, o.lambda_true) && same_number(lambda_upp, o.lambda_upp) &&
         radius_steps == o.radius_steps && uav_steps == o.uav_steps &&
         lloyd_iterations == o.lloyd_iterations;
}

HapsStage maximize_haps_coverage(double kappa, const Scenario &scenario,
                                 const OptimizerConfig &config, std::uint64_t seed) {
  const BandwidthSplit split = split_bandwidth(kappa, scenario.subcarriers_total);
  HapsStage best;
  best.radius = scenario.coverage_radius;
  best.haps_users = partition(scenario, best.radius).haps_zone;
  if (split.cs == 0) {
    return best;
  }
  const PhaseDesign phase = scenario_phase_design(scenario);
  const UavDeployment none{};
  const int steps = config.radius_iterations > 0
                        ? config.radius_iterations
                        : static_cast<int>(std::floor(scenario.coverage_radius / config.radius_step));
  for (int t = 1; t <= steps; ++t) {
    const double radius = scenario.coverage_radius - t * config.radius_step;
    if (radius <= 0.0) {
      break;
    }
    ++best.radius_steps;
    const ZonePartition zone = partition(scenario, radius);
    bool feasible = true;
    if (!zone.haps_zone.empty()) {
      try {
        const AllocationPlan plan =
            build_plan(zone, split, none, scenario, derive_seed(seed, kPlanStream));
        const LinkEvaluator links(scenario, none, plan, phase);
        feasible = zone_feasible(zone.haps_zone, plan, links, scenario, nullptr);
      } catch (const Error &e) {
        if (e.code() != Errc::no_subcarriers_for_user && e.code() != Errc::insufficient_elements) {
          throw;
        }
        feasible = false;
      }
    }
    if (feasible) {
      best.radius = radius;
      best.haps_users = zone.haps_zone;
    }
  }
  return best;
}

UavStage minimize_uav_count(double radius, double kappa, const Scenario &scenario,
                            const OptimizerConfig &config, std::uint64_t seed) {
  const BandwidthSplit split = split_bandwidth(kappa, scenario.subcarriers_total);
  const ZonePartition zone = partition(scenario, radius);
  const std::vector<int> &zone_users = zone.uav_zone;
  UavStage out;
  if (zone_users.empty()) {
    return out;
  }
  if (split.uav == 0) {
    out.outage = zone_users;
    out.feasible = false;
    return out;
  }

  const int zone_size = static_cast<int>(zone_users.size());
  const int initial = std::clamp(config.initial_uavs.value_or(zone_size), 1, zone_size);
  out.initial_uavs = initial;
  const int max_steps = config.uav_iterations > 0 ? config.uav_iterations
                                                  : std::numeric_limits<int>::max();

  std::optional<UavStage> feasible;
  std::optional<UavStage> fallback;
  for (int t = 1; t <= max_steps; ++t) {
    const int n = initial - (t - 1) * config.uav_step;
    if (n < 1) {
      break;
    }
    ++out.uav_steps;
    UavDeployment deployment = kmeans_place(zone_users, scenario, n, kmeans_seed(seed, n), config.kmeans);
    out.lloyd_iterations += deployment.lloyd_iterations;

    std::vector<int> violators;
    bool ok = false;
    bool built = true;
    try {
      const AllocationPlan plan =
          build_plan(zone, split, deployment, scenario, derive_seed(seed, kPlanStream));
      const LinkEvaluator links(scenario, deployment, plan);
      ok = zone_feasible(zone_users, plan, links, scenario, &violators);
    } catch (const Error &e) {
      if (e.code() != Errc::no_subcarriers_for_user && e.code() != Errc::insufficient_elements) {
        throw;
      }
      built = false;
    }
    if (t == 1 && built) {
      fallback = UavStage{n, initial, deployment, violators, 0, 0, ok};
    }
    if (ok) {
      feasible = UavStage{n, initial, std::move(deployment), {}, 0, 0, true};
    }
  }

  const int steps = out.uav_steps;
  const int lloyd = out.lloyd_iterations;
  if (feasible) {
    out = std::move(*feasible);
  } else if (fallback) {
    out = std::move(*fallback);
    out.feasible = false;
  } else {
    // Not even N0 UAVs yield a valid plan: the whole zone is unserved.
    out = UavStage{};
    out.initial_uavs = initial;
    out.outage = zone_users;
    out.feasible = false;
  }
  out.uav_steps = steps;
  out.lloyd_iterations = lloyd;
  return out;
}

KappaPoint evaluate_kappa(double kappa, const Scenario &scenario, const OptimizerConfig &config,
                          std::uint64_t seed) {
  const BandwidthSplit split = split_bandwidth(kappa, scenario.subcarriers_total);
  const HapsStage haps = maximize_haps_coverage(kappa, scenario, config, seed);
  const UavStage uav = minimize_uav_count(haps.radius, kappa, scenario, config, seed);

  KappaPoint point;
  ParetoSolution &s = point.solution;
  s.kappa = kappa;
  s.split = split;
  s.radius = haps.radius;
  s.n_uav = uav.n_uav;
  s.initial_uavs = uav.initial_uavs;
  s.deployment = uav.deployment;

  const ZonePartition zone = partition(scenario, haps.radius);
  s.plan = build_plan(zone, split, s.deployment, scenario, derive_seed(seed, kPlanStream));
  const PhaseDesign phase = scenario_phase_design(scenario);
  const FeasibilityReport report = check_feasibility(s.plan, scenario, s.deployment, phase);
  s.u_haps = report.u_haps;
  s.outage_users = report.violating_users;
  s.rate_bps = report.rate_bps;
  s.lambda_true = true_total_pathloss(s.deployment, scenario);
  s.lambda_upp = lambda_bound(s.deployment, scenario, s.initial_uavs);

  KappaTrace &t = point.trace;
  t.kappa = kappa;
  t.l_cs = split.cs;
  t.l_uav = split.uav;
  t.radius = s.radius;
  t.u_haps = s.u_haps;
  t.n_uav = s.n_uav;
  t.outage = static_cast<int>(s.outage_users.size());
  t.lambda_true = s.lambda_true;
  t.lambda_upp = s.lambda_upp;
  t.radius_steps = haps.radius_steps;
  t.uav_steps = uav.uav_steps;
  t.lloyd_iterations = uav.lloyd_iterations;
  return point;
}

bool lexicographically_better(const KappaTrace &a, const KappaTrace &b) {
  if (a.outage != b.outage) {
    return a.outage < b.outage;
  }
  if (a.u_haps != b.u_haps) {
    return a.u_haps > b.u_haps;
  }
  if (a.n_uav != b.n_uav) {
    return a.n_uav < b.n_uav;
  }
  // A missing bound never wins a tie.
  const double la = std::isnan(a.lambda_upp) ? std::numeric_limits<double>::infinity() : a.lambda_upp;
  const double lb = std::isnan(b.lambda_upp) ? std::numeric_limits<double>::infinity() : b.lambda_upp;
  return la < lb;
}

SolveResult solve(const Scenario &scenario, const OptimizerConfig &config, std::uint64_t seed) {
  const std::vector<double> grid = config.grid();
  if (grid.empty()) {
    throw Error(Errc::invalid_argument, "solve: empty kappa grid");
  }
  SolveResult result;
  std::optional<KappaPoint> best;
  for (std::size_t q = 0; q < grid.size(); ++q) {
    KappaPoint point = evaluate_kappa(grid[q], scenario, config, seed);
    result.trace.push_back(point.trace);
    if (!best || lexicographically_better(point.trace, best->trace)) {
      best = std::move(point);
    }
    if (config.early_stop && q > 0) {
      const KappaTrace &now = result.trace[q];
      const KappaTrace &prev = result.trace[q - 1];
      if (std::abs(now.n_uav - prev.n_uav) < config.epsilon &&
          std::abs(now.u_haps - prev.u_haps) < config.epsilon) {
        result.early_stopped = true;
        break;
      }
    }
  }
  result.best = std::move(best->solution);
  return result;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
  case Regime::uav_only: return "uav-only";
  case Regime::haps_only: return "haps-only";
  case Regime::equal_split: return "equal-split";
  case Regime::optimized: return "optimized";
  }
  return "unknown";
}

std::optional<Regime> parse_regime(std::string_view name) {
  for (Regime r : {Regime::uav_only, Regime::haps_only, Regime::equal_split, Regime::optimized}) {
    if (to_string(r) == name) {
      return r;
    }
  }
  return std::nullopt;
}

SolveResult run_baseline(Regime regime, const Scenario &scenario, const OptimizerConfig &config,
                         std::uint64_t seed) {
  OptimizerConfig fixed = config;
  switch (regime) {
  case Regime::uav_only:
    fixed.kappa_grid = {0.0};
    break;
  case Regime::haps_only:
    fixed.kappa_grid = {std::numeric_limits<double>::infinity()};
    break;
  case Regime::equal_split:
    fixed.kappa_grid = {1.0};
    break;
  case Regime::optimized:
    return solve(scenario, config, seed);
  }
  fixed.max_outer = 1;
  fixed.early_stop = false;
  return solve(scenario, fixed, seed);
}

} // namespace hapsplan
