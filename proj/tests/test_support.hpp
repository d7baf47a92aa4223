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

// Shared fixtures for the unit tests.

#ifndef HAPSPLAN_TEST_SUPPORT_HPP
#define HAPSPLAN_TEST_SUPPORT_HPP

#include "hapsplan/allocation.hpp"
#include "hapsplan/placement.hpp"
#include "hapsplan/scenario.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

namespace hapsplan::test {

inline Scenario scenario_with_users(std::vector<Point3> users) {
  Scenario s;
  s.users = std::move(users);
  return s;
}

// Fails the current test with every structural violation of the plan.
inline void expect_structurally_valid(const AllocationPlan &plan, const Scenario &scenario,
                                      const UavDeployment &deployment) {
  const StructuralReport report = check_structure(plan, scenario, deployment);
  std::string all;
  for (const std::string &v : report.violations) {
    all += v + "\n";
  }
  EXPECT_TRUE(report.ok()) << all;
}

inline double relative_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace hapsplan::test

#endif
