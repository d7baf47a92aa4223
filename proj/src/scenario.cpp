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

#include "hapsplan/scenario.hpp"

#include "hapsplan/error.hpp"
#include "hapsplan/rng.hpp"

#include <numbers>
#include <sstream>

namespace hapsplan {

namespace {

void require(std::vector<Violation> &out, bool ok, const char *field, std::string message) {
  if (!ok) {
    out.push_back({field, std::move(message)});
  }
}

} // namespace

std::vector<Violation> validate(const Scenario &s) {
  std::vector<Violation> out;
  const RadioParams &r = s.radio;

  require(out, std::isfinite(r.carrier_hz) && r.carrier_hz > 0.0, "fc_hz", "fc_hz > 0");
  require(out, std::isfinite(r.speed_mps) && r.speed_mps > 0.0, "c_mps", "c_mps > 0");
  require(out, r.pathloss_exponent >= 2.0, "alpha", "alpha >= 2");
  require(out, r.eta_los >= 1.0, "eta1", "eta1 >= 1");
  require(out, r.eta_nlos >= r.eta_los, "eta2", "eta2 >= eta1");
  require(out, r.los_psi >= 0.0, "psi", "psi >= 0");
  require(out, r.los_beta >= 0.0, "beta", "beta >= 0");
  require(out, r.noise_psd_w_per_hz > 0.0, "N0_dbm_hz", "N0 > 0");
  require(out, r.gain_cs > 0.0, "G_cs_db", "G_cs > 0 (linear)");
  require(out, r.gain_uav > 0.0, "G_uav_db", "G_uav > 0 (linear)");
  require(out, r.gain_user > 0.0, "G_user_db", "G_user > 0 (linear)");
  require(out, r.reflection_efficiency >= 0.0 && r.reflection_efficiency <= 1.0, "mu",
          "0 <= mu <= 1");

  require(out, is_finite(s.cs_pos), "cs_pos_m", "finite components");
  require(out, is_finite(s.haps_pos), "haps_pos_m", "finite components");
  require(out, is_finite(s.coverage_center), "coverage_center_m", "finite components");
  require(out, s.coverage_radius > 0.0, "R0_m", "R0 > 0");
  require(out, s.min_separation >= 0.0, "D0_m", "D0 >= 0");
  require(out, s.uav_altitude > 0.0, "uav_altitude_m", "uav altitude > 0");
  require(out, s.subcarriers_total >= 2, "L_tot", "L_tot >= 2");
  require(out, s.bandwidth_hz > 0.0, "BW_hz", "per-subcarrier bandwidth > 0");
  require(out, s.cs_power_w > 0.0, "P_cs_dbm", "P_cs > 0");
  require(out, s.uav_power_w > 0.0, "P_uav_dbm", "P_uav > 0");
  require(out, s.ris_elements >= 1, "M", "M >= 1");
  require(out, s.min_rate_bps >= 0.0, "r0_bps", "r0 >= 0");

  for (std::size_t i = 0; i < s.users.size(); ++i) {
    const Point3 &u = s.users[i];
    if (!is_finite(u)) {
      out.push_back({"users", "user " + std::to_string(i) + ": non-finite position"});
      continue;
    }
    if (u.z != 0.0) {
      out.push_back({"users", "user " + std::to_string(i) + ": ground users need z = 0"});
    }
    const double d = horizontal_distance(u, s.coverage_center);
    if (d > s.coverage_radius) {
      std::ostringstream msg;
      msg << "user outside coverage: user " << i << " at distance " << d << " > R0 "
          << s.coverage_radius;
      out.push_back({"users", msg.str()});
    }
    for (std::size_t j = i + 1; j < s.users.size(); ++j) {
      const double sep = horizontal_distance(u, s.users[j]);
      if (sep < s.min_separation) {
        std::ostringstream msg;
        msg << "user separation below D0: users " << i << " and " << j << " are " << sep
            << " m apart";
        out.push_back({"users", msg.str()});
      }
    }
  }
  return out;
}

std::vector<Point3> generate_users(int count, double radius, double min_separation,
                                   std::uint64_t seed, double attempts_per_user) {
  if (count < 1) {
    throw Error(Errc::invalid_argument, "generate_users: count must be >= 1");
  }
  if (!(radius > 0.0) || !(min_separation >= 0.0)) {
    throw Error(Errc::invalid_argument, "generate_users: need radius > 0 and D0 >= 0");
  }
  const auto budget = static_cast<std::uint64_t>(attempts_per_user * count);
  const double min_sq = min_separation * min_separation;

  Rng rng(seed);
  std::vector<Point3> users;
  users.reserve(static_cast<std::size_t>(count));
  std::uint64_t attempts = 0;
  while (users.size() < static_cast<std::size_t>(count)) {
    if (attempts++ >= budget) {
      std::ostringstream msg;
      msg << "placement budget exhausted: placed " << users.size() << " of " << count
          << " users after " << budget << " proposals (R0=" << radius
          << ", D0=" << min_separation << ")";
      throw Error(Errc::placement_budget_exhausted, msg.str());
    }
    const double r = radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const Point3 p{r * std::cos(theta), r * std::sin(theta), 0.0};
    bool clear = true;
    for (const Point3 &q : users) {
      if (squared_horizontal_distance(p, q) < min_sq) {
        clear = false;
        break;
      }
    }
    if (clear) {
      users.push_back(p);
    }
  }
  return users;
}

Scenario default_scenario(std::uint64_t seed, int count) {
  Scenario s;
  s.users = generate_users(count, s.coverage_radius, s.min_separation, seed);
  return s;
}

} // namespace hapsplan
