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

#ifndef HAPSPLAN_PLACEMENT_HPP
#define HAPSPLAN_PLACEMENT_HPP

#include "hapsplan/geometry.hpp"
#include "hapsplan/scenario.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hapsplan {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2 &) const = default;
};

// UAV positions and user association produced by k-means over the UAV zone.
struct UavDeployment {
  std::vector<Point3> uavs;  // centroids at the fixed UAV altitude
  std::vector<int> users;    // ascending user indices of the UAV zone
  std::vector<int> serving;  // serving UAV per entry of `users`
  double kmeans_objective = 0.0;
  int lloyd_iterations = 0;

  int n_uav() const { return static_cast<int>(uavs.size()); }
  std::optional<int> uav_of(int user) const;
  std::vector<int> members(int uav) const;

  bool operator==(const UavDeployment &) const = default;
};

struct KmeansOptions {
  int max_iter = 100;
  int restarts = 20;
};

struct Clustering {
  std::vector<Point2> centroids;
  std::vector<int> label;
  double objective = 0.0;
  int iterations = 0;
};

// Sum of squared distances of each point to its labelled centroid.
double clustering_objective(std::span<const Point2> points, std::span<const Point2> centroids,
                            std::span<const int> label);

// One Lloyd run from k-means++ seeding. When `history` is given it receives
// the objective after every update step. Ties go to the lowest centroid
// index; a cluster that empties is re-seeded at the point farthest from its
// own centroid.
Clustering lloyd(std::span<const Point2> points, int k, std::uint64_t seed, int max_iter,
                 std::vector<double> *history = nullptr);

// Best of opts.restarts seeded Lloyd runs.
Clustering kmeans(std::span<const Point2> points, int k, std::uint64_t seed,
                  const KmeansOptions &opts = {});

// Places k UAVs over the given users of `scenario`. Throws empty-zone when
// there are no users and k > 0, invalid-argument when k > |users|.
UavDeployment kmeans_place(std::span<const int> users, const Scenario &scenario, int k,
                           std::uint64_t seed, const KmeansOptions &opts = {});

// Sum of average path losses over every associated user-UAV pair.
double true_total_pathloss(const UavDeployment &deployment, const Scenario &scenario);

// eta2 (4 pi f_c / c)^2 [z^2 I N0 + kmeans objective]; N0 defaults to the
// zone size. Valid only for alpha = 2, otherwise throws invalid-alpha.
double pathloss_upper_bound(const UavDeployment &deployment, const Scenario &scenario,
                            std::optional<int> initial_uavs = std::nullopt);

} // namespace hapsplan

#endif
