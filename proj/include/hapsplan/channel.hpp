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

#ifndef HAPSPLAN_CHANNEL_HPP
#define HAPSPLAN_CHANNEL_HPP

#include "hapsplan/geometry.hpp"
#include "hapsplan/scenario.hpp"

#include <span>
#include <vector>

namespace hapsplan {

// Air-to-ground link summary between one ground user and one UAV.
struct UavLinkStats {
  double distance = 0.0;
  double elevation_deg = 0.0;
  double p_los = 0.0;
  double avg_pathloss = 0.0; // linear, >= 1
  double channel_gain = 0.0; // |h|^2 = G_uav * G_user / avg_pathloss
};

struct RateBreakdown {
  std::vector<double> per_subcarrier_snr;
  double rate_bps = 0.0;
};

// Elevation of `uav` seen from `user`, (180/pi) asin(dz / d), in degrees.
// Throws degenerate-geometry when the two points coincide.
double elevation_angle_deg(const Point3 &user, const Point3 &uav);

// Logistic LoS probability 1 / (1 + psi exp(-beta (theta - psi))).
double p_los(double elevation_deg, double psi, double beta);

// (4 pi f_c d / c)^alpha
double free_space_loss(double distance, const RadioParams &radio);

// (4 pi f_c d / c)^2 -- the RIS hops always use the square-law Friis model.
double friis_loss(double distance, const RadioParams &radio);

// LoS/NLoS-weighted mean path loss,
//   [P_los eta1 + (1 - P_los) eta2] (4 pi f_c d / c)^alpha.
double uav_avg_pathloss(const Point3 &user, const Point3 &uav, const RadioParams &radio);

UavLinkStats uav_link(const Point3 &user, const Point3 &uav, const RadioParams &radio);

// Per-element cascaded power gain CS -> element -> user,
//   G_cs G_user / (L_cs-ris L_ris-user).
double cascade_element_gain(const Point3 &cs, const Point3 &element, const Point3 &user,
                            const RadioParams &radio);

double noise_power(const RadioParams &radio, double bandwidth_hz);

// Sum over subcarriers of B_l log2(1 + snr_l), in bits/s.
double user_rate(std::span<const double> per_subcarrier_snr, double subcarrier_bandwidth_hz);

} // namespace hapsplan

#endif
