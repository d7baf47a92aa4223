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

#ifndef HAPSPLAN_SCENARIO_HPP
#define HAPSPLAN_SCENARIO_HPP

#include "hapsplan/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hapsplan {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

// Radio constants shared by every link. All gains and losses are linear.
struct RadioParams {
  double carrier_hz = 2e9;
  double speed_mps = 3e8;
  double pathloss_exponent = 2.0;
  double eta_los = 1.0;
  double eta_nlos = 31.0;
  double los_psi = 5.0;
  double los_beta = 0.5;
  double noise_psd_w_per_hz = dbm_to_watts(-174.0);
  double gain_cs = db_to_linear(43.2);
  double gain_uav = 1.0;
  double gain_user = 1.0;
  double reflection_efficiency = 1.0; // mu, in [0, 1]

  double wavelength() const { return speed_mps / carrier_hz; }
};

// Immutable description of one deployment area.
struct Scenario {
  std::vector<Point3> users;
  Point3 cs_pos{-10000.0, 0.0, 1000.0};
  Point3 haps_pos{-5000.0, 100.0, 20000.0};
  Point3 coverage_center{0.0, 0.0, 0.0};
  double coverage_radius = 500.0;  // R0
  double min_separation = 100.0;   // D0
  double uav_altitude = 100.0;
  RadioParams radio{};
  int subcarriers_total = 64;
  double bandwidth_hz = 100e6;
  double cs_power_w = dbm_to_watts(40.0);
  double uav_power_w = dbm_to_watts(20.0);
  std::int64_t ris_elements = 350000;
  double min_rate_bps = 1e6;
  // Partition the UAV sub-band across UAVs instead of letting every UAV
  // reuse it; removes inter-cell interference.
  bool strict_cross_uav_orthogonality = false;

  int user_count() const { return static_cast<int>(users.size()); }
  double subcarrier_bandwidth() const { return bandwidth_hz / subcarriers_total; }
};

struct Violation {
  std::string field;
  std::string message;
};

// Every violated Scenario/RadioParams invariant; empty means valid.
std::vector<Violation> validate(const Scenario &scenario);

inline constexpr double kDefaultAttemptsPerUser = 10000.0;

// Uniform users in the disk of radius `radius` around the origin, pairwise at
// least `min_separation` apart. Rejection sampling with a budget of
// attempts_per_user * count proposals; throws placement-budget-exhausted.
std::vector<Point3> generate_users(int count, double radius, double min_separation,
                                   std::uint64_t seed,
                                   double attempts_per_user = kDefaultAttemptsPerUser);

// Case-study defaults with `count` users drawn from `seed`.
Scenario default_scenario(std::uint64_t seed, int count = 20);

} // namespace hapsplan

#endif
