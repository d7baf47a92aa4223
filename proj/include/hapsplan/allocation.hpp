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

#ifndef HAPSPLAN_ALLOCATION_HPP
#define HAPSPLAN_ALLOCATION_HPP

#include "hapsplan/placement.hpp"
#include "hapsplan/ris.hpp"
#include "hapsplan/scenario.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hapsplan {

// Users within `radius` of the coverage center (boundary included) form the
// UAV zone; everyone else is in the HAPS-RIS zone.
struct ZonePartition {
  double radius = 0.0;
  std::vector<int> uav_zone;   // B, ascending
  std::vector<int> haps_zone;  // C, ascending

  bool operator==(const ZonePartition &) const = default;
};

ZonePartition partition(std::span<const Point3> users, const Point3 &center, double radius);
inline ZonePartition partition(const Scenario &s, double radius) {
  return partition(s.users, s.coverage_center, radius);
}

// Subcarriers [0, cs) belong to the CS, [cs, cs + uav) to the UAVs.
struct BandwidthSplit {
  double kappa = 1.0;
  int cs = 0;
  int uav = 0;

  int total() const { return cs + uav; }
  bool operator==(const BandwidthSplit &) const = default;
};

// L_cs = floor(kappa / (kappa + 1) L_tot), L_uav = L_tot - L_cs.
// kappa = 0 and kappa = +inf give the degenerate all-UAV / all-CS splits.
BandwidthSplit split_bandwidth(double kappa, int total_subcarriers);

enum class Server { none, haps, uav };

struct UserAllocation {
  Server server = Server::none;
  int uav = -1;                    // serving UAV when server == uav
  std::vector<int> subcarriers;    // ascending
  std::vector<double> power_w;     // aligned with subcarriers
  ElementRange ris{};              // element block when server == haps

  bool operator==(const UserAllocation &) const = default;
};

struct AllocationPlan {
  ZonePartition zone;
  BandwidthSplit split;
  RisClustering ris;
  int n_uav = 0;
  std::vector<UserAllocation> users; // one entry per scenario user

  bool operator==(const AllocationPlan &) const = default;
};

// Users with at least one subcarrier and at least one RIS element.
int count_haps_users(const AllocationPlan &plan);

// Builds the concrete assignments for a zone split and UAV deployment.
//
// HAPS users each get floor(L_cs / |C|) contiguous CS subcarriers tied to
// their RIS cluster slot; the remainder idles. Inside each UAV the members
// share the UAV sub-band round-robin (all of it, or the UAV's own slice under
// strict cross-UAV orthogonality). Power is split evenly over the active
// (user, subcarrier) pairs of each transmitter. A deployment with no UAVs
// leaves the UAV zone unassigned.
//
// Throws no-subcarriers-for-user when a zone user would get nothing and
// insufficient-elements when M < |C|.
AllocationPlan build_plan(const ZonePartition &zone, const BandwidthSplit &split,
                          const UavDeployment &deployment, const Scenario &scenario,
                          std::uint64_t seed);

struct StructuralReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Exclusive association, power budgets (1e-12 relative), per-node subcarrier
// orthogonality, sub-band containment and RIS element exclusivity.
StructuralReport check_structure(const AllocationPlan &plan, const Scenario &scenario,
                                 const UavDeployment &deployment);

struct FeasibilityReport {
  bool haps_ok = true;
  bool uav_ok = true;
  bool structural_ok = true;
  std::vector<int> violating_users;     // rate below r0, or unassigned
  std::vector<std::string> structural;  // named constraint violations
  std::vector<double> rate_bps;         // achieved rate per user
  int u_haps = 0;

  bool ok() const { return haps_ok && uav_ok && structural_ok; }
};

FeasibilityReport check_feasibility(const AllocationPlan &plan, const Scenario &scenario,
                                    const UavDeployment &deployment, const PhaseDesign &phase);

} // namespace hapsplan

#endif
