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

#include "hapsplan/links.hpp"

#include "hapsplan/error.hpp"

#include <algorithm>
#include <sstream>

namespace hapsplan {

namespace {

// Position of `subcarrier` in the user's assignment, or -1.
int slot_in(const UserAllocation &a, int subcarrier) {
  const auto it = std::lower_bound(a.subcarriers.begin(), a.subcarriers.end(), subcarrier);
  if (it == a.subcarriers.end() || *it != subcarrier) {
    return -1;
  }
  return static_cast<int>(it - a.subcarriers.begin());
}

} // namespace

LinkEvaluator::LinkEvaluator(const Scenario &scenario, const UavDeployment &deployment,
                             const AllocationPlan &plan, const PhaseDesign &phase)
    : LinkEvaluator(scenario, deployment, plan) {
  phase_ = &phase;
}

LinkEvaluator::LinkEvaluator(const Scenario &scenario, const UavDeployment &deployment,
                             const AllocationPlan &plan)
    : scenario_(scenario), deployment_(deployment), plan_(plan), phase_(nullptr),
      noise_(noise_power(scenario.radio, scenario.subcarrier_bandwidth())) {
  const int total = scenario.subcarriers_total;
  tx_power_.assign(static_cast<std::size_t>(deployment.n_uav()),
                   std::vector<double>(static_cast<std::size_t>(total), 0.0));
  for (const UserAllocation &a : plan.users) {
    if (a.server != Server::uav || a.uav < 0 || a.uav >= deployment.n_uav()) {
      continue;
    }
    for (std::size_t k = 0; k < a.subcarriers.size(); ++k) {
      const int l = a.subcarriers[k];
      if (l >= 0 && l < total) {
        tx_power_[static_cast<std::size_t>(a.uav)][static_cast<std::size_t>(l)] += a.power_w[k];
      }
    }
  }
}

double LinkEvaluator::uav_sinr(int user, int uav, int subcarrier) const {
  const UserAllocation &a = plan_.users.at(static_cast<std::size_t>(user));
  const bool known = uav >= 0 && uav < deployment_.n_uav();
  const int k = known && a.server == Server::uav && a.uav == uav ? slot_in(a, subcarrier) : -1;
  if (k < 0) {
    std::ostringstream msg;
    msg << "unassigned link: user " << user << ", UAV " << uav << ", subcarrier " << subcarrier;
    throw Error(Errc::unassigned_link, msg.str());
  }
  return sinr_from_gains(a.power_w[static_cast<std::size_t>(k)], uav, subcarrier, gains_to_uavs(user));
}

std::vector<double> LinkEvaluator::gains_to_uavs(int user) const {
  const Point3 &pos = scenario_.users[static_cast<std::size_t>(user)];
  std::vector<double> gains;
  gains.reserve(deployment_.uavs.size());
  for (const Point3 &uav : deployment_.uavs) {
    gains.push_back(uav_link(pos, uav, scenario_.radio).channel_gain);
  }
  return gains;
}

double LinkEvaluator::sinr_from_gains(double power, int uav, int subcarrier,
                                      const std::vector<double> &gains) const {
  double interference = 0.0;
  for (int j = 0; j < deployment_.n_uav(); ++j) {
    if (j == uav) {
      continue;
    }
    const double p = tx_power_[static_cast<std::size_t>(j)][static_cast<std::size_t>(subcarrier)];
    interference += p * gains[static_cast<std::size_t>(j)];
  }
  return power * gains[static_cast<std::size_t>(uav)] / (noise_ + interference);
}

double LinkEvaluator::haps_snr(int user, int subcarrier) const {
  const UserAllocation &a = plan_.users.at(static_cast<std::size_t>(user));
  const int k = a.server == Server::haps ? slot_in(a, subcarrier) : -1;
  if (k < 0 || phase_ == nullptr) {
    std::ostringstream msg;
    msg << "user " << user << " is not a HAPS-RIS user on subcarrier " << subcarrier;
    throw Error(Errc::unassigned_user, msg.str());
  }
  const double gain =
      collapsed_cascade_gain(scenario_.users[static_cast<std::size_t>(user)], a.ris, *phase_,
                             scenario_.cs_pos, scenario_.haps_pos, scenario_.radio);
  return a.power_w[static_cast<std::size_t>(k)] * gain / noise_;
}

RateBreakdown LinkEvaluator::user_rate(int user) const {
  RateBreakdown out;
  const UserAllocation &a = plan_.users.at(static_cast<std::size_t>(user));
  if (a.server == Server::none) {
    return out;
  }
  out.per_subcarrier_snr.reserve(a.subcarriers.size());
  if (a.server == Server::uav) {
    const std::vector<double> gains = gains_to_uavs(user);
    for (std::size_t k = 0; k < a.subcarriers.size(); ++k) {
      out.per_subcarrier_snr.push_back(sinr_from_gains(a.power_w[k], a.uav, a.subcarriers[k], gains));
    }
  } else {
    if (phase_ == nullptr) {
      throw Error(Errc::unassigned_user, "HAPS rate requested without a phase design");
    }
    // Every subcarrier of a HAPS user sees the same cascade gain.
    const double gain =
        collapsed_cascade_gain(scenario_.users[static_cast<std::size_t>(user)], a.ris, *phase_,
                               scenario_.cs_pos, scenario_.haps_pos, scenario_.radio);
    for (std::size_t k = 0; k < a.subcarriers.size(); ++k) {
      out.per_subcarrier_snr.push_back(a.power_w[k] * gain / noise_);
    }
  }
  out.rate_bps = hapsplan::user_rate(out.per_subcarrier_snr, scenario_.subcarrier_bandwidth());
  return out;
}

double uav_sinr(int user, int uav, int subcarrier, const AllocationPlan &plan,
                const Scenario &scenario, const UavDeployment &deployment) {
  return LinkEvaluator(scenario, deployment, plan).uav_sinr(user, uav, subcarrier);
}

double haps_snr(int user, int subcarrier, const AllocationPlan &plan, const Scenario &scenario,
                const PhaseDesign &phase) {
  static const UavDeployment none{};
  return LinkEvaluator(scenario, none, plan, phase).haps_snr(user, subcarrier);
}

} // namespace hapsplan
