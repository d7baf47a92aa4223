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

#ifndef HAPSPLAN_SWEEP_HPP
#define HAPSPLAN_SWEEP_HPP

#include "hapsplan/config.hpp"
#include "hapsplan/optimizer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hapsplan {

enum class SweepVariable { ris_elements, cs_power_dbm, min_rate_bps, kappa };

std::string_view to_string(SweepVariable variable); // "M", "P_cs", "r0", "kappa"
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

struct SweepSpec {
  SweepVariable variable = SweepVariable::ris_elements;
  std::vector<double> grid;
  ExperimentConfig base;
  Regime regime = Regime::optimized;
  int replications = 1; // seeds 0 .. replications - 1
  int threads = 0;      // 0: hardware concurrency
};

std::vector<std::string> validate(const SweepSpec &spec);

// {"variable", "grid", "regime", "replications", "threads", and one of
// "config" (inline object) or "config_path"}. Relative config paths resolve
// against `base_dir`.
SweepSpec parse_sweep_spec(const nlohmann::ordered_json &doc, const std::string &base_dir = ".");
SweepSpec load_sweep_spec(const std::string &path);

// `base` with the swept variable set to `value`. A kappa sweep pins the
// grid to that single value.
ExperimentConfig apply_sweep_value(const ExperimentConfig &base, SweepVariable variable,
                                   double value);

struct SweepRow {
  double value = 0.0;
  std::uint64_t seed = 0;
  int u_haps = 0;
  double coverage_pct = 0.0;
  int n_uav = 0;
  double lambda_true_db = 0.0;
  double lambda_upp_db = 0.0;
  double r_star = 0.0;
  int outage_count = 0;
  double wall_ms = 0.0;
  std::string error; // non-empty marks a failed cell

  // Everything except wall_ms.
  bool same_result(const SweepRow &other) const;
};

struct SweepResult {
  SweepVariable variable = SweepVariable::ris_elements;
  std::vector<SweepRow> rows; // sorted by value, then seed
};

// One grid cell; failures come back as error-tagged rows.
SweepRow run_cell(const SweepSpec &spec, double value, std::uint64_t seed);

// All (value, seed) cells on a worker pool.
SweepResult run_sweep(const SweepSpec &spec);

enum class CoverageMode {
  haps_only,           // every user through the HAPS-RIS link
  single_uav_assisted, // at most one UAV next to the HAPS-RIS zone
};

struct RisSearch {
  std::int64_t m_min = 0;
  std::int64_t lower = 0;  // largest tested infeasible M (0 if none)
  int evaluations = 0;
};

// Smallest M giving zero outage in `mode`, by doubling from M = 1 and then
// bisecting to 1% relative width. Throws not-achievable past m_max.
RisSearch min_ris_for_full_coverage(double min_rate_bps, CoverageMode mode,
                                    const ExperimentConfig &base, std::uint64_t seed,
                                    std::int64_t m_max = 100'000'000);

// Full coverage predicate used by the search.
bool full_coverage(const Scenario &scenario, CoverageMode mode, const OptimizerConfig &config,
                   std::uint64_t seed);

// Spearman rank correlation with average ranks for ties; NaN when either
// side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

} // namespace hapsplan

#endif
