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
#include "hapsplan/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hapsplan {

namespace {

constexpr double kBudgetTolerance = 1e-12;

std::string str(const std::ostringstream &os) { return os.str(); }

} // namespace

ZonePartition partition(std::span<const Point3> users, const Point3 &center, double radius) {
  ZonePartition z;
  z.radius = radius;
  for (int i = 0; i < static_cast<int>(users.size()); ++i) {
    if (horizontal_distance(users[static_cast<std::size_t>(i)], center) <= radius) {
      z.uav_zone.push_back(i);
    } else {
      z.haps_zone.push_back(i);
    }
  }
  return z;
}

BandwidthSplit split_bandwidth(double kappa, int total_subcarriers) {
  if (std::isnan(kappa) || kappa < 0.0) {
    throw Error(Errc::invalid_argument, "split_bandwidth: kappa must be >= 0");
  }
  if (total_subcarriers < 0) {
    throw Error(Errc::invalid_argument, "split_bandwidth: negative subcarrier count");
  }
  BandwidthSplit s;
  s.kappa = kappa;
  if (std::isinf(kappa)) {
    s.cs = total_subcarriers;
  } else {
    s.cs = static_cast<int>(std::floor(kappa * total_subcarriers / (kappa + 1.0)));
  }
  s.uav = total_subcarriers - s.cs;
  return s;
}

int count_haps_users(const AllocationPlan &plan) {
  int n = 0;
  for (const UserAllocation &a : plan.users) {
    if (a.server == Server::haps && !a.subcarriers.empty() && a.ris.count > 0) {
      ++n;
    }
  }
  return n;
}

AllocationPlan build_plan(const ZonePartition &zone, const BandwidthSplit &split,
                          const UavDeployment &deployment, const Scenario &scenario,
                          std::uint64_t seed) {
  if (split.cs < 0 || split.uav < 0 || split.total() > scenario.subcarriers_total) {
    throw Error(Errc::invalid_argument, "build_plan: bandwidth split exceeds L_tot");
  }
  AllocationPlan plan;
  plan.zone = zone;
  plan.split = split;
  plan.n_uav = deployment.n_uav();
  plan.users.assign(scenario.users.size(), UserAllocation{});

  // HAPS-RIS zone.
  const auto &haps = zone.haps_zone;
  if (!haps.empty()) {
    const int per_user = split.cs / static_cast<int>(haps.size());
    if (per_user == 0) {
      std::ostringstream msg;
      msg << "no subcarriers for HAPS-RIS users: L_cs=" << split.cs << " < |C|=" << haps.size();
      throw Error(Errc::no_subcarriers_for_user, str(msg));
    }
    plan.ris = cluster_ris(haps, scenario.ris_elements, derive_seed(seed, 0x5215));
    const double power = scenario.cs_power_w / (static_cast<double>(per_user) * haps.size());
    for (std::size_t k = 0; k < plan.ris.users.size(); ++k) {
      const int user = plan.ris.users[k];
      const int slot = plan.ris.slot_of_user[k];
      UserAllocation &a = plan.users.at(static_cast<std::size_t>(user));
      a.server = Server::haps;
      a.ris = plan.ris.range_of_slot(slot);
      for (int l = slot * per_user; l < (slot + 1) * per_user; ++l) {
        a.subcarriers.push_back(l);
        a.power_w.push_back(power);
      }
    }
  }

  // UAV zone.
  if (deployment.n_uav() == 0) {
    return plan;
  }
  if (deployment.users != zone.uav_zone) {
    throw Error(Errc::invalid_argument, "build_plan: deployment does not cover the UAV zone");
  }
  const int n_uav = deployment.n_uav();
  for (int j = 0; j < n_uav; ++j) {
    const std::vector<int> members = deployment.members(j);
    if (members.empty()) {
      continue;
    }
    // Sub-band offsets this UAV may use.
    std::vector<int> band;
    for (int t = 0; t < split.uav; ++t) {
      if (!scenario.strict_cross_uav_orthogonality || t % n_uav == j) {
        band.push_back(split.cs + t);
      }
    }
    if (band.size() < members.size()) {
      std::ostringstream msg;
      msg << "no subcarriers for UAV users: UAV " << j << " has " << members.size()
          << " members but " << band.size() << " subcarriers";
      throw Error(Errc::no_subcarriers_for_user, str(msg));
    }
    const double power = scenario.uav_power_w / static_cast<double>(band.size());
    for (std::size_t t = 0; t < band.size(); ++t) {
      UserAllocation &a = plan.users.at(static_cast<std::size_t>(members[t % members.size()]));
      a.server = Server::uav;
      a.uav = j;
      a.subcarriers.push_back(band[t]);
      a.power_w.push_back(power);
    }
  }
  return plan;
}

StructuralReport check_structure(const AllocationPlan &plan, const Scenario &scenario,
                                 const UavDeployment &deployment) {
  StructuralReport report;
  auto fail = [&](const std::ostringstream &os) { report.violations.push_back(os.str()); };
  const int n_users = scenario.user_count();
  const int cs = plan.split.cs;
  const int uav_end = plan.split.cs + plan.split.uav;

  if (static_cast<int>(plan.users.size()) != n_users) {
    std::ostringstream os;
    os << "plan covers " << plan.users.size() << " users, scenario has " << n_users;
    fail(os);
    return report;
  }
  if (plan.split.cs < 0 || plan.split.uav < 0 || uav_end > scenario.subcarriers_total) {
    std::ostringstream os;
    os << "bandwidth split: L_cs + L_uav = " << uav_end << " exceeds L_tot "
       << scenario.subcarriers_total;
    fail(os);
  }

  // Zone partition.
  const ZonePartition expect = partition(scenario, plan.zone.radius);
  if (expect.uav_zone != plan.zone.uav_zone || expect.haps_zone != plan.zone.haps_zone) {
    std::ostringstream os;
    os << "zone partition does not match the radius threshold R=" << plan.zone.radius;
    fail(os);
  }
  std::vector<int> zone_of(static_cast<std::size_t>(n_users), 0); // 1 = B, 2 = C
  for (int u : plan.zone.uav_zone) {
    zone_of.at(static_cast<std::size_t>(u)) |= 1;
  }
  for (int u : plan.zone.haps_zone) {
    zone_of.at(static_cast<std::size_t>(u)) |= 2;
  }
  for (int i = 0; i < n_users; ++i) {
    if (zone_of[static_cast<std::size_t>(i)] == 0 || zone_of[static_cast<std::size_t>(i)] == 3) {
      std::ostringstream os;
      os << "user " << i << " is not in exactly one zone";
      fail(os);
    }
  }

  double cs_power = 0.0;
  std::vector<double> uav_power(static_cast<std::size_t>(deployment.n_uav()), 0.0);
  std::vector<int> cs_owner(static_cast<std::size_t>(std::max(cs, 0)), -1);
  // owner per (uav, subcarrier) and, for strict mode, per subcarrier.
  std::vector<std::vector<int>> uav_owner(
      static_cast<std::size_t>(deployment.n_uav()),
      std::vector<int>(static_cast<std::size_t>(std::max(scenario.subcarriers_total, 0)), -1));
  std::vector<int> band_owner(static_cast<std::size_t>(std::max(scenario.subcarriers_total, 0)), -1);
  std::vector<std::pair<ElementRange, int>> ris_blocks;

  for (int i = 0; i < n_users; ++i) {
    const UserAllocation &a = plan.users[static_cast<std::size_t>(i)];
    if (a.power_w.size() != a.subcarriers.size()) {
      std::ostringstream os;
      os << "user " << i << ": power list does not match subcarrier list";
      fail(os);
      continue;
    }
    if (!std::is_sorted(a.subcarriers.begin(), a.subcarriers.end()) ||
        std::adjacent_find(a.subcarriers.begin(), a.subcarriers.end()) != a.subcarriers.end()) {
      std::ostringstream os;
      os << "user " << i << ": subcarriers not strictly ascending";
      fail(os);
    }
    for (double p : a.power_w) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        std::ostringstream os;
        os << "user " << i << ": invalid power " << p;
        fail(os);
      }
    }
    switch (a.server) {
    case Server::none:
      if (!a.subcarriers.empty() || a.ris.count != 0) {
        std::ostringstream os;
        os << "user " << i << ": unassigned but holds resources";
        fail(os);
      }
      break;
    case Server::haps: {
      if (zone_of[static_cast<std::size_t>(i)] != 2) {
        std::ostringstream os;
        os << "exclusive association: user " << i << " served by HAPS-RIS outside the HAPS-RIS zone";
        fail(os);
      }
      if (a.uav != -1) {
        std::ostringstream os;
        os << "exclusive association: HAPS-RIS user " << i << " also names UAV " << a.uav;
        fail(os);
      }
      if (a.subcarriers.empty() || a.ris.count <= 0) {
        std::ostringstream os;
        os << "user " << i << ": HAPS-RIS user without subcarriers or RIS elements";
        fail(os);
      }
      ris_blocks.emplace_back(a.ris, i);
      for (std::size_t k = 0; k < a.subcarriers.size(); ++k) {
        const int l = a.subcarriers[k];
        if (l < 0 || l >= cs) {
          std::ostringstream os;
          os << "user " << i << ": subcarrier " << l << " outside the CS sub-band";
          fail(os);
          continue;
        }
        int &owner = cs_owner[static_cast<std::size_t>(l)];
        if (owner != -1) {
          std::ostringstream os;
          os << "CS orthogonality: subcarrier " << l << " serves users " << owner << " and " << i;
          fail(os);
        }
        owner = i;
        cs_power += a.power_w[k];
      }
      break;
    }
    case Server::uav: {
      if (zone_of[static_cast<std::size_t>(i)] != 1) {
        std::ostringstream os;
        os << "exclusive association: user " << i << " served by a UAV outside the UAV zone";
        fail(os);
      }
      if (a.ris.count != 0) {
        std::ostringstream os;
        os << "exclusive association: UAV user " << i << " also holds RIS elements";
        fail(os);
      }
      if (a.uav < 0 || a.uav >= deployment.n_uav()) {
        std::ostringstream os;
        os << "user " << i << ": serving UAV " << a.uav << " does not exist";
        fail(os);
        break;
      }
      if (deployment.uav_of(i) != a.uav) {
        std::ostringstream os;
        os << "user " << i << ": served by UAV " << a.uav << " but clustered elsewhere";
        fail(os);
      }
      if (a.subcarriers.empty()) {
        std::ostringstream os;
        os << "user " << i << ": UAV user without subcarriers";
        fail(os);
      }
      for (std::size_t k = 0; k < a.subcarriers.size(); ++k) {
        const int l = a.subcarriers[k];
        if (l < cs || l >= uav_end) {
          std::ostringstream os;
          os << "user " << i << ": subcarrier " << l << " outside the UAV sub-band";
          fail(os);
          continue;
        }
        int &owner = uav_owner[static_cast<std::size_t>(a.uav)][static_cast<std::size_t>(l)];
        if (owner != -1) {
          std::ostringstream os;
          os << "UAV orthogonality: UAV " << a.uav << " subcarrier " << l << " serves users "
             << owner << " and " << i;
          fail(os);
        }
        owner = i;
        if (scenario.strict_cross_uav_orthogonality) {
          int &any = band_owner[static_cast<std::size_t>(l)];
          if (any != -1 && plan.users[static_cast<std::size_t>(any)].uav != a.uav) {
            std::ostringstream os;
            os << "cross-UAV orthogonality: subcarrier " << l << " reused by UAVs "
               << plan.users[static_cast<std::size_t>(any)].uav << " and " << a.uav;
            fail(os);
          }
          any = i;
        }
        uav_power[static_cast<std::size_t>(a.uav)] += a.power_w[k];
      }
      break;
    }
    }
  }

  if (cs_power > scenario.cs_power_w * (1.0 + kBudgetTolerance)) {
    std::ostringstream os;
    os << "CS power budget: " << cs_power << " W > " << scenario.cs_power_w << " W";
    fail(os);
  }
  for (std::size_t j = 0; j < uav_power.size(); ++j) {
    if (uav_power[j] > scenario.uav_power_w * (1.0 + kBudgetTolerance)) {
      std::ostringstream os;
      os << "UAV power budget: UAV " << j << " uses " << uav_power[j] << " W > "
         << scenario.uav_power_w << " W";
      fail(os);
    }
  }

  std::sort(ris_blocks.begin(), ris_blocks.end(),
            [](const auto &a, const auto &b) { return a.first.first < b.first.first; });
  for (std::size_t k = 0; k < ris_blocks.size(); ++k) {
    const ElementRange &r = ris_blocks[k].first;
    if (r.first < 0 || r.first + r.count > scenario.ris_elements) {
      std::ostringstream os;
      os << "RIS block of user " << ris_blocks[k].second << " exceeds M";
      fail(os);
    }
    if (k > 0) {
      const ElementRange &prev = ris_blocks[k - 1].first;
      if (prev.first + prev.count > r.first) {
        std::ostringstream os;
        os << "RIS exclusivity: users " << ris_blocks[k - 1].second << " and "
           << ris_blocks[k].second << " share elements";
        fail(os);
      }
    }
  }
  return report;
}

FeasibilityReport check_feasibility(const AllocationPlan &plan, const Scenario &scenario,
                                    const UavDeployment &deployment, const PhaseDesign &phase) {
  FeasibilityReport report;
  const StructuralReport structure = check_structure(plan, scenario, deployment);
  report.structural = structure.violations;
  report.structural_ok = structure.ok();
  report.u_haps = count_haps_users(plan);
  report.rate_bps.assign(scenario.users.size(), 0.0);
  if (plan.users.size() != scenario.users.size()) {
    report.haps_ok = report.uav_ok = false;
    return report;
  }

  const LinkEvaluator links(scenario, deployment, plan, phase);
  auto check_zone = [&](const std::vector<int> &zone, bool &zone_ok) {
    for (int u : zone) {
      const UserAllocation &a = plan.users[static_cast<std::size_t>(u)];
      double rate = 0.0;
      bool served = a.server != Server::none && !a.subcarriers.empty();
      if (served) {
        try {
          rate = links.user_rate(u).rate_bps;
        } catch (const Error &) {
          served = false;
        }
      }
      report.rate_bps[static_cast<std::size_t>(u)] = rate;
      if (!served || rate < scenario.min_rate_bps) {
        zone_ok = false;
        report.violating_users.push_back(u);
      }
    }
  };
  check_zone(plan.zone.haps_zone, report.haps_ok);
  check_zone(plan.zone.uav_zone, report.uav_ok);
  std::sort(report.violating_users.begin(), report.violating_users.end());
  return report;
}

} // namespace hapsplan
