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

#ifndef HAPSPLAN_RIS_HPP
#define HAPSPLAN_RIS_HPP

#include "hapsplan/geometry.hpp"
#include "hapsplan/scenario.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hapsplan {

// Wraps an angle into [0, 2 pi).
double wrap_phase(double radians);

// RIS phase shifts for M elements together with the reference phases xi0
// (CS side) and omega0 (user side) they were designed against.
//
// A design where every element shares one phase is stored compactly, since
// M reaches 1e7 in practice; per-element vectors are kept only for
// arbitrary designs.
class PhaseDesign {
public:
  static PhaseDesign uniform(std::int64_t elements, double phase, double xi0, double omega0);
  static PhaseDesign from_phases(std::vector<double> phases, double xi0, double omega0);

  std::int64_t size() const noexcept { return size_; }
  bool is_uniform() const noexcept { return uniform_.has_value(); }
  double phase(std::int64_t m) const;
  double xi0() const noexcept { return xi0_; }
  double omega0() const noexcept { return omega0_; }

  // Relaxed reflection coefficient mu exp(-j (phi_m - xi0 - omega0)).
  std::complex<double> reflection(std::int64_t m, double mu) const;

  // Sum of relaxed reflection coefficients over [first, first + count).
  std::complex<double> reflection_sum(std::int64_t first, std::int64_t count, double mu) const;

private:
  PhaseDesign() = default;

  std::int64_t size_ = 0;
  std::optional<double> uniform_;
  std::vector<double> phases_;
  double xi0_ = 0.0;
  double omega0_ = 0.0;
};

// Closed-form co-phasing: phi_m = (xi0 + omega0) mod 2 pi for every element,
// which makes each relaxed reflection coefficient real and equal to mu.
PhaseDesign cophased_design(double xi0, double omega0, std::int64_t elements);

// (xi0, omega0) from the collapsed path lengths CS -> HAPS and
// HAPS -> coverage center.
std::pair<double, double> reference_phases(const Scenario &scenario);

// Co-phased design over all M elements of the scenario.
PhaseDesign scenario_phase_design(const Scenario &scenario);

struct ElementRange {
  std::int64_t first = 0;
  std::int64_t count = 0;

  bool operator==(const ElementRange &) const = default;
};

// Users of the HAPS-RIS zone and the contiguous element block each owns.
struct RisClustering {
  std::vector<int> users;            // ascending user indices
  std::vector<int> slot_of_user;     // cluster slot index, aligned with users
  std::int64_t elements_per_cluster = 0;

  ElementRange range_of_slot(int slot) const {
    return {elements_per_cluster * slot, elements_per_cluster};
  }
  // Element block of `user`, or nullopt when the user owns no cluster.
  std::optional<ElementRange> range_of_user(int user) const;
  std::optional<int> slot_of(int user) const;

  bool operator==(const RisClustering &) const = default;
};

// Splits M elements into |C| blocks of floor(M / |C|) elements and maps them
// onto the users through a seeded random permutation. Leftover elements stay
// idle. Throws insufficient-elements when M < |C|.
RisClustering cluster_ris(std::span<const int> users_in_haps_zone, std::int64_t elements,
                          std::uint64_t seed);

// Square side x side grid in the horizontal plane centered at `center`.
std::vector<Point3> planar_element_grid(const Point3 &center, int side, double spacing);

// |sum_m h_m theta_m|^2 with true per-element distances and path phases
// xi_m = 2 pi d(CS, m) / lambda, omega_m = 2 pi d(m, user) / lambda.
// Uses phase.phase(m) for m < elements.size().
double exact_cascade_gain(const Point3 &user, std::span<const Point3> elements,
                          const PhaseDesign &phase, const Point3 &cs, const RadioParams &radio);

// Same quantity with every element collapsed onto `haps` and reference phases
// taken from `phase`, over the element block `range`.
double collapsed_cascade_gain(const Point3 &user, ElementRange range, const PhaseDesign &phase,
                              const Point3 &cs, const Point3 &haps, const RadioParams &radio);

} // namespace hapsplan

#endif
