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

#ifndef HAPSPLAN_LINKS_HPP
#define HAPSPLAN_LINKS_HPP

#include "hapsplan/allocation.hpp"
#include "hapsplan/channel.hpp"

#include <vector>

namespace hapsplan {

// Link-level evaluation of a concrete plan: UAV SINR with co-channel
// interference from the other UAVs, HAPS-RIS SNR through the collapsed
// cascade, and per-user rates.
class LinkEvaluator {
public:
  LinkEvaluator(const Scenario &scenario, const UavDeployment &deployment,
                const AllocationPlan &plan, const PhaseDesign &phase);
  // UAV-only evaluator; haps_snr throws.
  LinkEvaluator(const Scenario &scenario, const UavDeployment &deployment,
                const AllocationPlan &plan);

  // Throws unassigned-link unless `subcarrier` of `uav` serves `user`.
  double uav_sinr(int user, int uav, int subcarrier) const;

  // Throws unassigned-user unless `user` is a HAPS user on `subcarrier`.
  double haps_snr(int user, int subcarrier) const;

  // Rate over the user's assigned subcarriers; empty for unassigned users.
  RateBreakdown user_rate(int user) const;

private:
  std::vector<double> gains_to_uavs(int user) const;
  double sinr_from_gains(double power, int uav, int subcarrier,
                         const std::vector<double> &gains) const;

  const Scenario &scenario_;
  const UavDeployment &deployment_;
  const AllocationPlan &plan_;
  const PhaseDesign *phase_;
  double noise_;
  // tx_power_[j][l]: power UAV j radiates on subcarrier l.
  std::vector<std::vector<double>> tx_power_;
};

double uav_sinr(int user, int uav, int subcarrier, const AllocationPlan &plan,
                const Scenario &scenario, const UavDeployment &deployment);

double haps_snr(int user, int subcarrier, const AllocationPlan &plan, const Scenario &scenario,
                const PhaseDesign &phase);

} // namespace hapsplan

#endif
