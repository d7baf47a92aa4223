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

#include "hapsplan/channel.hpp"

#include "hapsplan/error.hpp"

#include <cmath>
#include <numbers>

namespace hapsplan {

double elevation_angle_deg(const Point3 &user, const Point3 &uav) {
  const double d = distance_3d(user, uav);
  if (!(d > 0.0)) {
    throw Error(Errc::degenerate_geometry, "elevation angle undefined for coincident points");
  }
  return 180.0 / std::numbers::pi * std::asin((uav.z - user.z) / d);
}

double p_los(double elevation_deg, double psi, double beta) {
  return 1.0 / (1.0 + psi * std::exp(-beta * (elevation_deg - psi)));
}

double free_space_loss(double distance, const RadioParams &radio) {
  const double x = 4.0 * std::numbers::pi * radio.carrier_hz * distance / radio.speed_mps;
  return radio.pathloss_exponent == 2.0 ? x * x : std::pow(x, radio.pathloss_exponent);
}

double friis_loss(double distance, const RadioParams &radio) {
  const double x = 4.0 * std::numbers::pi * radio.carrier_hz * distance / radio.speed_mps;
  return x * x;
}

UavLinkStats uav_link(const Point3 &user, const Point3 &uav, const RadioParams &radio) {
  UavLinkStats s;
  s.distance = distance_3d(user, uav);
  s.elevation_deg = elevation_angle_deg(user, uav);
  s.p_los = p_los(s.elevation_deg, radio.los_psi, radio.los_beta);
  const double excess = s.p_los * radio.eta_los + (1.0 - s.p_los) * radio.eta_nlos;
  s.avg_pathloss = excess * free_space_loss(s.distance, radio);
  s.channel_gain = radio.gain_uav * radio.gain_user / s.avg_pathloss;
  return s;
}

double uav_avg_pathloss(const Point3 &user, const Point3 &uav, const RadioParams &radio) {
  return uav_link(user, uav, radio).avg_pathloss;
}

double cascade_element_gain(const Point3 &cs, const Point3 &element, const Point3 &user,
                            const RadioParams &radio) {
  const double up = friis_loss(distance_3d(cs, element), radio);
  const double down = friis_loss(distance_3d(element, user), radio);
  return radio.gain_cs * radio.gain_user / (up * down);
}

double noise_power(const RadioParams &radio, double bandwidth_hz) {
  return radio.noise_psd_w_per_hz * bandwidth_hz;
}

double user_rate(std::span<const double> per_subcarrier_snr, double subcarrier_bandwidth_hz) {
  double rate = 0.0;
  for (double snr : per_subcarrier_snr) {
    rate += subcarrier_bandwidth_hz * std::log2(1.0 + snr);
  }
  return rate;
}

} // namespace hapsplan
