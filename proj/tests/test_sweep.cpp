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

#include "hapsplan/config.hpp"
#include "hapsplan/error.hpp"
#include "hapsplan/sweep.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hapsplan;

namespace {

SweepSpec m_sweep(Regime regime, double r0, std::vector<double> grid, int replications) {
  SweepSpec spec;
  spec.variable = SweepVariable::ris_elements;
  spec.grid = std::move(grid);
  spec.regime = regime;
  spec.replications = replications;
  spec.base.scenario.min_rate_bps = r0;
  return spec;
}

} // namespace

TEST(Spearman, HandComputedValues) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(spearman(x, std::vector<double>{2, 4, 6, 8, 10}), 1.0);
  EXPECT_DOUBLE_EQ(spearman(x, std::vector<double>{9, 7, 5, 3, 1}), -1.0);
  // Ranks {1, 2, 3, 4} vs {3.5, 3.5, 2, 1}:
  // dx = {-1.5, -0.5, 0.5, 1.5}, dy = {1, 1, -0.5, -1.5} -> -4.5 / sqrt(5 * 4.5).
  EXPECT_NEAR(spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{13, 13, 1, 0}),
              -4.5 / std::sqrt(22.5), 1e-15);
  EXPECT_TRUE(std::isnan(spearman(x, std::vector<double>{1, 1, 1, 1, 1})));
  EXPECT_THROW(spearman(x, std::vector<double>{1, 2}), Error);
}

TEST(SweepSpec, Validation) {
  SweepSpec spec = m_sweep(Regime::haps_only, 1e6, {1e5, 2e5}, 2);
  EXPECT_TRUE(validate(spec).empty());
  spec.grid = {2e5, 1e5, 3e5};
  EXPECT_FALSE(validate(spec).empty());
  spec.grid = {};
  EXPECT_FALSE(validate(spec).empty());
  spec.grid = {1e5};
  spec.replications = 0;
  EXPECT_FALSE(validate(spec).empty());
  spec.replications = 1;
  spec.grid = {1.5};
  EXPECT_FALSE(validate(spec).empty());
}

TEST(SweepSpec, ParseInlineConfig) {
  const auto doc = nlohmann::ordered_json::parse(R"({
    "variable": "P_cs", "grid": [30, 35, 40], "regime": "haps-only", "replications": 2,
    "config": {"M": 200000, "r0_bps": 5e6}})");
  const SweepSpec spec = parse_sweep_spec(doc);
  EXPECT_EQ(spec.variable, SweepVariable::cs_power_dbm);
  EXPECT_EQ(spec.regime, Regime::haps_only);
  EXPECT_EQ(spec.base.scenario.ris_elements, 200000);
  EXPECT_EQ(spec.grid.size(), 3u);
  try {
    parse_sweep_spec(nlohmann::ordered_json::parse(R"({"variable": "Q", "grid": [1]})"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("variable"), std::string::npos);
  }
}

TEST(ApplySweepValue, SetsTheRightField) {
  const ExperimentConfig base;
  EXPECT_EQ(apply_sweep_value(base, SweepVariable::ris_elements, 1e6).scenario.ris_elements,
            1000000);
  EXPECT_DOUBLE_EQ(apply_sweep_value(base, SweepVariable::cs_power_dbm, 30).scenario.cs_power_w,
                   1.0);
  EXPECT_DOUBLE_EQ(apply_sweep_value(base, SweepVariable::min_rate_bps, 3e6).scenario.min_rate_bps,
                   3e6);
  const ExperimentConfig k = apply_sweep_value(base, SweepVariable::kappa, 2.5);
  EXPECT_EQ(k.optimizer.grid(), (std::vector<double>{2.5}));
}

TEST(RunSweep, RowsSortedAndReproducibleCellByCell) {
  SweepSpec spec = m_sweep(Regime::optimized, 2.5e7, {1e5, 2e5, 5e5}, 3);
  spec.threads = 4;
  const SweepResult res = run_sweep(spec);
  ASSERT_EQ(res.rows.size(), 9u);
  for (std::size_t i = 0; i < res.rows.size(); ++i) {
    const SweepRow &row = res.rows[i];
    EXPECT_EQ(row.value, spec.grid[i / 3]);
    EXPECT_EQ(row.seed, i % 3);
    EXPECT_TRUE(row.error.empty()) << row.error;
    EXPECT_DOUBLE_EQ(row.coverage_pct, 100.0 * row.u_haps / 20.0);
    EXPECT_TRUE(run_cell(spec, row.value, row.seed).same_result(row));
  }
}

TEST(RunSweep, CoverageGrowsWithRisSizeHapsOnly) {
  const SweepResult res = run_sweep(m_sweep(Regime::haps_only, 1.5e7, {1e4, 1e5, 1e6}, 2));
  std::vector<double> m;
  std::vector<double> cov;
  for (const SweepRow &r : res.rows) {
    m.push_back(r.value);
    cov.push_back(r.coverage_pct);
  }
  EXPECT_GE(spearman(m, cov), 0.9);
}

TEST(RunSweep, CoverageGrowsWithCsPowerHapsOnly) {
  SweepSpec spec = m_sweep(Regime::haps_only, 1.5e7, {30, 35, 40}, 2);
  spec.variable = SweepVariable::cs_power_dbm;
  spec.base.scenario.ris_elements = 350000;
  const SweepResult res = run_sweep(spec);
  std::vector<double> p;
  std::vector<double> cov;
  for (const SweepRow &r : res.rows) {
    p.push_back(r.value);
    cov.push_back(r.coverage_pct);
  }
  EXPECT_GE(spearman(p, cov), 0.9);
}

TEST(RunSweep, FailedCellsBecomeErrorRows) {
  SweepSpec spec = m_sweep(Regime::haps_only, 1e6, {1e5}, 2);
  spec.base.user_count = 80; // cannot be packed at D0 = 100 m
  spec.base.attempts_per_user = 20;
  const SweepResult res = run_sweep(spec);
  ASSERT_EQ(res.rows.size(), 2u);
  for (const SweepRow &r : res.rows) {
    EXPECT_NE(r.error.find("placement budget"), std::string::npos);
    EXPECT_EQ(r.u_haps, -1);
  }
}

TEST(MinRis, TinyDemandNeedsOneElementPerUser) {
  ExperimentConfig base;
  // One element per user already clears a millibit per second.
  const RisSearch r = min_ris_for_full_coverage(1e-3, CoverageMode::haps_only, base, 0);
  EXPECT_EQ(r.m_min, 20);
}

TEST(MinRis, BracketInvariant) {
  ExperimentConfig base;
  const RisSearch r = min_ris_for_full_coverage(1.5e7, CoverageMode::haps_only, base, 1);
  Scenario s = make_scenario(base, 1);
  s.min_rate_bps = 1.5e7;
  s.ris_elements = r.m_min;
  EXPECT_TRUE(full_coverage(s, CoverageMode::haps_only, base.optimizer, 1));
  s.ris_elements = r.lower;
  EXPECT_FALSE(full_coverage(s, CoverageMode::haps_only, base.optimizer, 1));
  EXPECT_LE(r.m_min - r.lower, std::max<std::int64_t>(1, r.m_min / 100));
}

TEST(MinRis, SingleUavAssistanceNeedsFewerElements) {
  ExperimentConfig base;
  for (double r0 : {2e6, 1e7}) {
    const auto haps = min_ris_for_full_coverage(r0, CoverageMode::haps_only, base, 2);
    const auto assisted = min_ris_for_full_coverage(r0, CoverageMode::single_uav_assisted, base, 2);
    EXPECT_LE(assisted.m_min, haps.m_min) << "r0 " << r0;
  }
}

TEST(MinRis, CapReportsNotAchievable) {
  ExperimentConfig base;
  try {
    min_ris_for_full_coverage(1e9, CoverageMode::haps_only, base, 0, 1'000'000);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::not_achievable);
  }
  EXPECT_THROW(min_ris_for_full_coverage(0.0, CoverageMode::haps_only, base, 0), Error);
}
