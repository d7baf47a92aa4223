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

#ifndef HAPSPLAN_OPTIMIZER_HPP
#define HAPSPLAN_OPTIMIZER_HPP

#include "hapsplan/allocation.hpp"
#include "hapsplan/placement.hpp"
#include "hapsplan/ris.hpp"
#include "hapsplan/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hapsplan {

// {1, 1.5, 2, 2.5, ...} with `entries` values.
std::vector<double> default_kappa_grid(int entries);

struct OptimizerConfig {
  std::vector<double> kappa_grid;    // empty: default_kappa_grid(max_outer)
  int max_outer = 20;                // Q_max, caps the kappa scan
  double radius_step = 50.0;         // delta
  int uav_step = 1;                  // delta'
  int radius_iterations = 0;         // T; 0 scans every positive radius
  int uav_iterations = 0;            // T'; 0 scans down to one UAV
  double epsilon = 1.0;
  std::optional<int> initial_uavs;   // N_uav^(0); nullopt means |B|
  bool early_stop = false;           // stop the kappa scan on a flat step
  KmeansOptions kmeans{};

  std::vector<double> grid() const;
};

// Violated config invariants (delta > 0, strictly increasing grid, ...).
std::vector<std::string> validate(const OptimizerConfig &config);

struct HapsStage {
  double radius = 0.0;          // R*
  std::vector<int> haps_users;  // C(R*)
  int radius_steps = 0;
};

struct UavStage {
  int n_uav = 0;
  int initial_uavs = 0;
  UavDeployment deployment;
  std::vector<int> outage;      // UAV-zone users left below r0 or unserved
  int uav_steps = 0;
  int lloyd_iterations = 0;
  bool feasible = true;
};

// One operating point of the bandwidth portioning factor.
struct ParetoSolution {
  double kappa = 1.0;
  BandwidthSplit split;
  double radius = 0.0;
  int n_uav = 0;
  int initial_uavs = 0;
  int u_haps = 0;
  std::vector<int> outage_users;
  double lambda_true = 0.0;
  double lambda_upp = 0.0;      // NaN when alpha != 2
  UavDeployment deployment;
  AllocationPlan plan;
  std::vector<double> rate_bps; // achieved rate per user

  bool operator==(const ParetoSolution &) const;
};

struct KappaTrace {
  double kappa = 1.0;
  int l_cs = 0;
  int l_uav = 0;
  double radius = 0.0;
  int u_haps = 0;
  int n_uav = 0;
  int outage = 0;
  double lambda_true = 0.0;
  double lambda_upp = 0.0;
  int radius_steps = 0;
  int uav_steps = 0;
  int lloyd_iterations = 0;

  bool operator==(const KappaTrace &) const;
};

struct SolveResult {
  ParetoSolution best;
  std::vector<KappaTrace> trace;
  bool early_stopped = false;
};

// Scans R = R0 - t delta (t = 1..T, R > 0) and keeps the smallest radius
// whose HAPS-RIS zone is fully rate-feasible; R0 when none is.
HapsStage maximize_haps_coverage(double kappa, const Scenario &scenario,
                                 const OptimizerConfig &config, std::uint64_t seed);

// Scans N = N0 - (t' - 1) delta' with k-means placement over the UAV zone of
// `radius` and keeps the smallest fully feasible N. If none is feasible,
// returns N0 with its violators as outage.
UavStage minimize_uav_count(double radius, double kappa, const Scenario &scenario,
                            const OptimizerConfig &config, std::uint64_t seed);

struct KappaPoint {
  ParetoSolution solution;
  KappaTrace trace;
};

// Both stages for one kappa, plus the final plan and its bookkeeping.
KappaPoint evaluate_kappa(double kappa, const Scenario &scenario, const OptimizerConfig &config,
                          std::uint64_t seed);

// True when `a` should be preferred over `b`: fewer outage users, then more
// HAPS-RIS users, then fewer UAVs, then a smaller path-loss bound.
bool lexicographically_better(const KappaTrace &a, const KappaTrace &b);

// Outer kappa scan with the inner lexicographic stages.
SolveResult solve(const Scenario &scenario, const OptimizerConfig &config, std::uint64_t seed);

enum class Regime { uav_only, haps_only, equal_split, optimized };

std::string_view to_string(Regime regime);
std::optional<Regime> parse_regime(std::string_view name);

// uav-only: kappa = 0; haps-only: kappa = inf; equal-split: kappa = 1;
// optimized: the full scan.
SolveResult run_baseline(Regime regime, const Scenario &scenario, const OptimizerConfig &config,
                         std::uint64_t seed);

} // namespace hapsplan

#endif
