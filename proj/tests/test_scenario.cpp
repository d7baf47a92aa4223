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

#include "hapsplan/error.hpp"
#include "hapsplan/rng.hpp"
#include "hapsplan/scenario.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

using namespace hapsplan;

TEST(Units, DecibelConversions) {
  EXPECT_DOUBLE_EQ(dbm_to_watts(40.0), 10.0);
  EXPECT_DOUBLE_EQ(dbm_to_watts(20.0), 0.1);
  EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
  EXPECT_NEAR(db_to_linear(43.2), 20892.961308540408, 1e-8);
  EXPECT_NEAR(watts_to_dbm(dbm_to_watts(-174.0)), -174.0, 1e-12);
  EXPECT_NEAR(linear_to_db(db_to_linear(12.5)), 12.5, 1e-12);
}

TEST(Scenario, CaseStudyDefaults) {
  const Scenario s = default_scenario(0);
  EXPECT_EQ(s.user_count(), 20);
  EXPECT_EQ(s.subcarriers_total, 64);
  EXPECT_DOUBLE_EQ(s.subcarrier_bandwidth(), 1.5625e6);
  EXPECT_DOUBLE_EQ(s.cs_power_w, 10.0);
  EXPECT_DOUBLE_EQ(s.uav_power_w, 0.1);
  EXPECT_EQ(s.cs_pos, (Point3{-10000.0, 0.0, 1000.0}));
  EXPECT_EQ(s.haps_pos, (Point3{-5000.0, 100.0, 20000.0}));
  EXPECT_DOUBLE_EQ(s.radio.wavelength(), 0.15);
  EXPECT_TRUE(validate(s).empty());
}

TEST(Scenario, ValidateNamesOffendingField) {
  Scenario s = default_scenario(1);
  s.radio.eta_los = 31.0;
  s.radio.eta_nlos = 1.0;
  const auto v = validate(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].field, "eta2");
  EXPECT_EQ(v[0].message, "eta2 >= eta1");
}

TEST(Scenario, ValidateRejectsBadUsers) {
  Scenario s = test::scenario_with_users({{0, 0, 0}, {50, 0, 0}, {600, 0, 0}, {0, 200, 5}});
  const auto v = validate(s);
  ASSERT_EQ(v.size(), 3u);
  for (const Violation &x : v) {
    EXPECT_EQ(x.field, "users");
  }
  const auto has = [&](const std::string &needle) {
    return std::any_of(v.begin(), v.end(),
                       [&](const Violation &x) { return x.message.find(needle) != std::string::npos; });
  };
  EXPECT_TRUE(has("user outside coverage"));
  EXPECT_TRUE(has("separation below D0"));
  EXPECT_TRUE(has("z = 0"));
}

TEST(Scenario, ValidateRejectsRadioNonsense) {
  Scenario s = default_scenario(2);
  s.radio.pathloss_exponent = 1.5;
  s.radio.reflection_efficiency = 1.2;
  s.ris_elements = 0;
  std::set<std::string> fields;
  for (const Violation &v : validate(s)) {
    fields.insert(v.field);
  }
  EXPECT_EQ(fields, (std::set<std::string>{"alpha", "mu", "M"}));
}

TEST(GenerateUsers, RespectsDiskAndSeparation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto users = generate_users(20, 500.0, 100.0, seed);
    ASSERT_EQ(users.size(), 20u);
    for (std::size_t i = 0; i < users.size(); ++i) {
      EXPECT_LE(std::hypot(users[i].x, users[i].y), 500.0);
      EXPECT_EQ(users[i].z, 0.0);
      for (std::size_t j = i + 1; j < users.size(); ++j) {
        EXPECT_GE(horizontal_distance(users[i], users[j]), 100.0);
      }
    }
  }
}

TEST(GenerateUsers, DeterministicPerSeed) {
  EXPECT_EQ(generate_users(20, 500.0, 100.0, 7), generate_users(20, 500.0, 100.0, 7));
  EXPECT_NE(generate_users(20, 500.0, 100.0, 7), generate_users(20, 500.0, 100.0, 8));
}

TEST(GenerateUsers, AreaUniformWithoutSeparation) {
  // Under uniform area sampling (r / R)^2 is U(0, 1); check its deciles.
  const auto users = generate_users(20000, 500.0, 0.0, 3);
  std::vector<int> bins(10, 0);
  for (const Point3 &u : users) {
    const double q = (u.x * u.x + u.y * u.y) / (500.0 * 500.0);
    ++bins[std::min(9, static_cast<int>(q * 10.0))];
  }
  for (int b : bins) {
    EXPECT_NEAR(b, 2000, 200);
  }
}

TEST(GenerateUsers, BudgetExhaustion) {
  // 80 discs of radius 50 m cannot be packed into a 500 m disc at D0 = 100.
  try {
    generate_users(80, 500.0, 100.0, 0, 50.0);
    FAIL() << "expected placement-budget-exhausted";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::placement_budget_exhausted);
  }
  EXPECT_THROW(generate_users(0, 500.0, 100.0, 0), Error);
}

TEST(Rng, UniformRangeAndDerivedStreams) {
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(rng.below(7), 7u);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
}

TEST(Rng, BelowIsUnbiased) {
  Rng rng(11);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 30000; ++i) {
    ++counts[rng.below(3)];
  }
  for (int c : counts) {
    EXPECT_NEAR(c, 10000, 400);
  }
}
