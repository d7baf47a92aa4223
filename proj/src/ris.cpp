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

#include "hapsplan/ris.hpp"

#include "hapsplan/channel.hpp"
#include "hapsplan/error.hpp"
#include "hapsplan/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace hapsplan {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

double wrap_phase(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  // fmod of a tiny negative value can round up to exactly 2 pi.
  return r >= kTwoPi ? 0.0 : r;
}

PhaseDesign PhaseDesign::uniform(std::int64_t elements, double phase, double xi0, double omega0) {
  if (elements < 1) {
    throw Error(Errc::invalid_argument, "PhaseDesign: need at least one element");
  }
  PhaseDesign d;
  d.size_ = elements;
  d.uniform_ = wrap_phase(phase);
  d.xi0_ = xi0;
  d.omega0_ = omega0;
  return d;
}

PhaseDesign PhaseDesign::from_phases(std::vector<double> phases, double xi0, double omega0) {
  if (phases.empty()) {
    throw Error(Errc::invalid_argument, "PhaseDesign: need at least one element");
  }
  PhaseDesign d;
  d.size_ = static_cast<std::int64_t>(phases.size());
  for (double &p : phases) {
    p = wrap_phase(p);
  }
  d.phases_ = std::move(phases);
  d.xi0_ = xi0;
  d.omega0_ = omega0;
  return d;
}

double PhaseDesign::phase(std::int64_t m) const {
  if (m < 0 || m >= size_) {
    throw Error(Errc::invalid_argument, "PhaseDesign: element index out of range");
  }
  return uniform_ ? *uniform_ : phases_[static_cast<std::size_t>(m)];
}

std::complex<double> PhaseDesign::reflection(std::int64_t m, double mu) const {
  return std::polar(mu, -(phase(m) - xi0_ - omega0_));
}

std::complex<double> PhaseDesign::reflection_sum(std::int64_t first, std::int64_t count,
                                                 double mu) const {
  if (count <= 0) {
    return {0.0, 0.0};
  }
  if (first < 0 || first + count > size_) {
    throw Error(Errc::invalid_argument, "PhaseDesign: element range out of bounds");
  }
  if (uniform_) {
    return static_cast<double>(count) * std::polar(mu, -(*uniform_ - xi0_ - omega0_));
  }
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t m = first; m < first + count; ++m) {
    sum += std::polar(mu, -(phases_[static_cast<std::size_t>(m)] - xi0_ - omega0_));
  }
  return sum;
}

PhaseDesign cophased_design(double xi0, double omega0, std::int64_t elements) {
  return PhaseDesign::uniform(elements, xi0 + omega0, xi0, omega0);
}

std::pair<double, double> reference_phases(const Scenario &s) {
  const double lambda = s.radio.wavelength();
  const double xi0 = wrap_phase(kTwoPi * distance_3d(s.cs_pos, s.haps_pos) / lambda);
  const double omega0 = wrap_phase(kTwoPi * distance_3d(s.haps_pos, s.coverage_center) / lambda);
  return {xi0, omega0};
}

PhaseDesign scenario_phase_design(const Scenario &s) {
  const auto [xi0, omega0] = reference_phases(s);
  return cophased_design(xi0, omega0, s.ris_elements);
}

std::optional<int> RisClustering::slot_of(int user) const {
  const auto it = std::lower_bound(users.begin(), users.end(), user);
  if (it == users.end() || *it != user) {
    return std::nullopt;
  }
  return slot_of_user[static_cast<std::size_t>(it - users.begin())];
}

std::optional<ElementRange> RisClustering::range_of_user(int user) const {
  const auto slot = slot_of(user);
  if (!slot) {
    return std::nullopt;
  }
  return range_of_slot(*slot);
}

RisClustering cluster_ris(std::span<const int> users_in_haps_zone, std::int64_t elements,
                          std::uint64_t seed) {
  RisClustering out;
  out.users.assign(users_in_haps_zone.begin(), users_in_haps_zone.end());
  std::sort(out.users.begin(), out.users.end());
  if (std::adjacent_find(out.users.begin(), out.users.end()) != out.users.end()) {
    throw Error(Errc::invalid_argument, "cluster_ris: duplicate user index");
  }
  const auto n = static_cast<std::int64_t>(out.users.size());
  if (n == 0) {
    return out;
  }
  if (elements < n) {
    std::ostringstream msg;
    msg << "insufficient RIS elements: M=" << elements << " < |C|=" << n;
    throw Error(Errc::insufficient_elements, msg.str());
  }
  out.elements_per_cluster = elements / n;

  // Fisher-Yates over the cluster slots gives the random injective mapping.
  out.slot_of_user.resize(out.users.size());
  std::iota(out.slot_of_user.begin(), out.slot_of_user.end(), 0);
  Rng rng(seed);
  for (std::size_t i = out.slot_of_user.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(out.slot_of_user[i], out.slot_of_user[j]);
  }
  return out;
}

std::vector<Point3> planar_element_grid(const Point3 &center, int side, double spacing) {
  if (side < 1) {
    throw Error(Errc::invalid_argument, "planar_element_grid: side must be >= 1");
  }
  std::vector<Point3> out;
  out.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
  const double offset = 0.5 * (side - 1) * spacing;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      out.push_back({center.x + c * spacing - offset, center.y + r * spacing - offset, center.z});
    }
  }
  return out;
}

double exact_cascade_gain(const Point3 &user, std::span<const Point3> elements,
                          const PhaseDesign &phase, const Point3 &cs, const RadioParams &radio) {
  if (static_cast<std::int64_t>(elements.size()) > phase.size()) {
    throw Error(Errc::invalid_argument, "exact_cascade_gain: more positions than phases");
  }
  const double lambda = radio.wavelength();
  const double mu = radio.reflection_efficiency;
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t m = 0; m < elements.size(); ++m) {
    const double d_up = distance_3d(cs, elements[m]);
    const double d_down = distance_3d(elements[m], user);
    const double amplitude =
        std::sqrt(radio.gain_cs * radio.gain_user / (friis_loss(d_up, radio) * friis_loss(d_down, radio)));
    const double xi = wrap_phase(kTwoPi * d_up / lambda);
    const double omega = wrap_phase(kTwoPi * d_down / lambda);
    const double phi = phase.phase(static_cast<std::int64_t>(m));
    sum += amplitude * std::polar(mu, -(phi - xi - omega));
  }
  return std::norm(sum);
}

double collapsed_cascade_gain(const Point3 &user, ElementRange range, const PhaseDesign &phase,
                              const Point3 &cs, const Point3 &haps, const RadioParams &radio) {
  const double h2 = cascade_element_gain(cs, haps, user, radio);
  return h2 * std::norm(phase.reflection_sum(range.first, range.count, radio.reflection_efficiency));
}

} // namespace hapsplan
