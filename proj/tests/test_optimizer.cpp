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

#include "hapsplan/allocation.hpp"
#include "hapsplan/error.hpp"
#include "hapsplan/links.hpp"
#include "hapsplan/optimizer.hpp"
#include "hapsplan/ris.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace hapsplan;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

OptimizerConfig grid_of(std::vector<double> grid) {
  OptimizerConfig c;
  c.max_outer = static_cast<int>(grid.size());
  c.kappa_grid = std::move(grid);
  return c;
}

// Smallest N in 1..|B| for which a fresh k-means placement serves every
// UAV-zone user at r0; 0 when none does.
int brute_force_uav_count(const Scenario &s, double radius, double kappa) {
  const ZonePartition z = partition(s, radius);
  const BandwidthSplit split = split_bandwidth(kappa, s.subcarriers_total);
  const PhaseDesign phase = scenario_phase_design(s);
  for (int n = 1; n <= static_cast<int>(z.uav_zone.size()); ++n) {
    const UavDeployment d = kmeans_place(z.uav_zone, s, n, 12345);
    AllocationPlan plan;
    try {
      plan = build_plan(z, split, d, s, 0);
    } catch (const Error &) {
      continue;
    }
    const FeasibilityReport r = check_feasibility(plan, s, d, phase);
    if (r.uav_ok) {
      return n;
    }
  }
  return 0;
}

} // namespace

TEST(KappaGrid, DefaultValues) {
  EXPECT_EQ(default_kappa_grid(4), (std::vector<double>{1.0, 1.5, 2.0, 2.5}));
  OptimizerConfig c;
  EXPECT_EQ(c.grid().size(), 20u);
  EXPECT_DOUBLE_EQ(c.grid().back(), 10.5);
  c.max_outer = 3;
  EXPECT_EQ(c.grid().size(), 3u);
}

TEST(OptimizerConfig, ValidateFlagsBrokenSettings) {
  OptimizerConfig c;
  EXPECT_TRUE(validate(c).empty());
  c.radius_step = 0.0;
  c.kappa_grid = {2.0, 1.0};
  c.epsilon = 0.0;
  const auto v = validate(c);
  EXPECT_EQ(v.size(), 3u);
}

TEST(MaximizeHaps, ZeroDemandReachesSmallestRadius) {
  Scenario s = default_scenario(0);
  s.min_rate_bps = 0.0;
  const HapsStage h = maximize_haps_coverage(1.0, s, OptimizerConfig{}, 0);
  EXPECT_DOUBLE_EQ(h.radius, 50.0);
  EXPECT_EQ(h.haps_users, partition(s, 50.0).haps_zone);
  EXPECT_EQ(h.radius_steps, 9);
}

TEST(MaximizeHaps, NothingFeasibleKeepsR0) {
  Scenario s = default_scenario(0);
  s.ris_elements = 1;
  s.min_rate_bps = 1e7;
  const HapsStage h = maximize_haps_coverage(1.0, s, OptimizerConfig{}, 0);
  EXPECT_DOUBLE_EQ(h.radius, 500.0);
  EXPECT_TRUE(h.haps_users.empty());
}

TEST(MaximizeHaps, ZoneGrowsAsRadiusShrinksProperty) {
  const Scenario s = default_scenario(3);
  std::size_t prev = 0;
  for (double r = 450.0; r > 0.0; r -= 50.0) {
    const std::size_t n = partition(s, r).haps_zone.size();
    EXPECT_GE(n, prev);
    prev = n;
  }
}

TEST(MinimizeUav, EmptyZoneNeedsNoUavs) {
  const Scenario s = test::scenario_with_users({{300, 0, 0}, {-300, 0, 0}});
  const UavStage u = minimize_uav_count(100.0, 1.0, s, OptimizerConfig{}, 0);
  EXPECT_EQ(u.n_uav, 0);
  EXPECT_TRUE(u.outage.empty());
}

TEST(MinimizeUav, SingleUserGetsOneUavOverhead) {
  const Scenario s = test::scenario_with_users({{20, -30, 0}, {400, 0, 0}});
  const UavStage u = minimize_uav_count(100.0, 1.0, s, OptimizerConfig{}, 0);
  ASSERT_EQ(u.n_uav, 1);
  EXPECT_TRUE(u.feasible);
  EXPECT_EQ(u.deployment.uavs[0], (Point3{20, -30, s.uav_altitude}));
}

TEST(MinimizeUav, NoUavBandwidthMeansOutage) {
  const Scenario s = default_scenario(1);
  const UavStage u = minimize_uav_count(500.0, kInf, s, OptimizerConfig{}, 0);
  EXPECT_EQ(u.n_uav, 0);
  EXPECT_EQ(u.outage.size(), 20u);
}

TEST(MinimizeUav, MatchesBruteForceScan) {
  // Two tight clusters far apart inside R, with orthogonal UAV sub-bands so
  // a second UAV can pay off. The answer has to agree with a direct N scan.
  Scenario base = test::scenario_with_users(
      {{-420, 0, 0}, {-400, 20, 0}, {-410, -25, 0}, {420, 0, 0}, {400, 20, 0}, {410, -25, 0}});
  base.strict_cross_uav_orthogonality = true;
  int nontrivial = 0;
  for (double r0 : {1e6, 1e7, 2e7, 4e7, 6e7, 8e7, 1.2e8, 1.6e8, 2.4e8}) {
    Scenario s = base;
    s.min_rate_bps = r0;
    const int want = brute_force_uav_count(s, 500.0, 0.0);
    const UavStage got = minimize_uav_count(500.0, 0.0, s, OptimizerConfig{}, 7);
    if (want == 0) {
      EXPECT_FALSE(got.feasible) << "r0 " << r0;
      EXPECT_EQ(got.n_uav, 6);
      EXPECT_FALSE(got.outage.empty());
    } else {
      EXPECT_TRUE(got.feasible) << "r0 " << r0;
      EXPECT_EQ(got.n_uav, want) << "r0 " << r0;
      nontrivial += want > 1 ? 1 : 0;
    }
  }
  EXPECT_GE(nontrivial, 1);
}

TEST(Solve, AllBandwidthToCsNeedsNoUavs) {
  const Scenario s = default_scenario(2);
  const SolveResult r = solve(s, grid_of({kInf}), 2);
  EXPECT_EQ(r.best.n_uav, 0);
  EXPECT_EQ(r.best.split.uav, 0);
}

TEST(Solve, AllBandwidthToUavsCoversNoHapsUser) {
  const Scenario s = default_scenario(2);
  const SolveResult r = solve(s, grid_of({0.0}), 2);
  EXPECT_EQ(r.best.u_haps, 0);
  EXPECT_EQ(r.best.split.cs, 0);
}

TEST(Solve, DeterministicForSeed) {
  Scenario s = default_scenario(4);
  s.min_rate_bps = 2.5e7;
  s.ris_elements = 200000;
  const SolveResult a = solve(s, OptimizerConfig{}, 4);
  const SolveResult b = solve(s, OptimizerConfig{}, 4);
  EXPECT_TRUE(a.best == b.best);
  EXPECT_EQ(a.trace, b.trace);
}

class SolveProperties : public ::testing::TestWithParam<std::tuple<double, std::uint64_t>> {};

TEST_P(SolveProperties, SolutionInvariants) {
  const auto [r0, seed] = GetParam();
  Scenario s = default_scenario(seed);
  s.min_rate_bps = r0;
  s.ris_elements = 500000;
  const OptimizerConfig config;
  const SolveResult r = solve(s, config, seed);
  const ParetoSolution &best = r.best;
  ASSERT_EQ(r.trace.size(), config.grid().size());

  // Not dominated by any traced kappa.
  const auto chosen = std::find_if(r.trace.begin(), r.trace.end(),
                                   [&](const KappaTrace &t) { return t.kappa == best.kappa; });
  ASSERT_NE(chosen, r.trace.end());
  for (const KappaTrace &t : r.trace) {
    EXPECT_FALSE(lexicographically_better(t, *chosen)) << "kappa " << t.kappa;
  }

  // Termination counters within the iteration cap.
  const int t_cap = static_cast<int>(std::floor(s.coverage_radius / config.radius_step));
  long long steps = 0;
  for (const KappaTrace &t : r.trace) {
    EXPECT_LE(t.radius_steps, t_cap);
    EXPECT_LE(t.uav_steps, s.user_count());
    EXPECT_LE(t.lloyd_iterations, t.uav_steps * config.kmeans.max_iter * config.kmeans.restarts);
    steps += t.radius_steps + t.lloyd_iterations;
  }
  EXPECT_LE(steps, static_cast<long long>(config.grid().size()) *
                       (t_cap + s.user_count() * config.kmeans.max_iter * config.kmeans.restarts));

  // HAPS-zone users meet r0; UAV-zone users do or are listed as outage.
  for (int u : best.plan.zone.haps_zone) {
    EXPECT_GE(best.rate_bps[static_cast<std::size_t>(u)], r0) << "user " << u;
  }
  for (int u : best.plan.zone.uav_zone) {
    const bool outage = std::binary_search(best.outage_users.begin(), best.outage_users.end(), u);
    EXPECT_TRUE(outage || best.rate_bps[static_cast<std::size_t>(u)] >= r0) << "user " << u;
  }
  if (best.n_uav > 0) {
    EXPECT_LE(best.lambda_true, best.lambda_upp);
  }
  test::expect_structurally_valid(best.plan, s, best.deployment);
}

INSTANTIATE_TEST_SUITE_P(RatesAndSeeds, SolveProperties,
                         ::testing::Combine(::testing::Values(1e6, 2e7, 4e7),
                                            ::testing::Values(0u, 1u, 2u)));

TEST(Solve, EarlyStopPrunesOnlyTheScan) {
  Scenario s = default_scenario(0);
  s.min_rate_bps = 1e6;
  OptimizerConfig c;
  c.early_stop = true;
  const SolveResult r = solve(s, c, 0);
  EXPECT_TRUE(r.early_stopped);
  EXPECT_EQ(r.trace.size(), 2u);
  c.early_stop = false;
  EXPECT_TRUE(solve(s, c, 0).best == r.best);
}

TEST(Lexicographic, OrderOfCriteria) {
  KappaTrace a;
  KappaTrace b;
  a.u_haps = 10;
  b.u_haps = 9;
  EXPECT_TRUE(lexicographically_better(a, b));
  b.u_haps = 10;
  a.n_uav = 2;
  b.n_uav = 3;
  EXPECT_TRUE(lexicographically_better(a, b));
  b.n_uav = 2;
  a.lambda_upp = 1.0;
  b.lambda_upp = 2.0;
  EXPECT_TRUE(lexicographically_better(a, b));
  EXPECT_FALSE(lexicographically_better(b, a));
  EXPECT_FALSE(lexicographically_better(a, a));
  a.outage = 1;
  EXPECT_FALSE(lexicographically_better(a, b));
}

TEST(Baselines, RegimeDefinitions) {
  Scenario s = default_scenario(5);
  s.min_rate_bps = 2e7;
  const OptimizerConfig c;
  const ParetoSolution uav = run_baseline(Regime::uav_only, s, c, 5).best;
  EXPECT_EQ(uav.split.cs, 0);
  EXPECT_EQ(uav.u_haps, 0);
  const ParetoSolution haps = run_baseline(Regime::haps_only, s, c, 5).best;
  EXPECT_EQ(haps.split.uav, 0);
  EXPECT_EQ(haps.n_uav, 0);
  const ParetoSolution equal = run_baseline(Regime::equal_split, s, c, 5).best;
  EXPECT_EQ(equal.split, (BandwidthSplit{1.0, 32, 32}));
  const ParetoSolution opt = run_baseline(Regime::optimized, s, c, 5).best;
  EXPECT_TRUE(opt == solve(s, c, 5).best);
  EXPECT_TRUE(opt.u_haps > equal.u_haps ||
              (opt.u_haps == equal.u_haps && opt.n_uav <= equal.n_uav));
}

TEST(Baselines, RegimeNames) {
  for (Regime r : {Regime::uav_only, Regime::haps_only, Regime::equal_split, Regime::optimized}) {
    EXPECT_EQ(parse_regime(to_string(r)), r);
  }
  EXPECT_FALSE(parse_regime("hybrid"));
}

TEST(ParetoSolution, EqualityTreatsNanAsEqual) {
  ParetoSolution a;
  a.lambda_upp = std::nan("");
  ParetoSolution b = a;
  EXPECT_TRUE(a == b);
  b.lambda_upp = 1.0;
  EXPECT_FALSE(a == b);
}
