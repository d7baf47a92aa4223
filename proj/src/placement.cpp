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

#include "hapsplan/placement.hpp"

#include "hapsplan/channel.hpp"
#include "hapsplan/error.hpp"
#include "hapsplan/rng.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace hapsplan {

namespace {

double sq_dist(const Point2 &a, const Point2 &b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

int nearest(const Point2 &p, std::span<const Point2> centroids) {
  int best = 0;
  double best_d = sq_dist(p, centroids[0]);
  for (int c = 1; c < static_cast<int>(centroids.size()); ++c) {
    const double d = sq_dist(p, centroids[static_cast<std::size_t>(c)]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

std::vector<Point2> seed_plus_plus(std::span<const Point2> points, int k, Rng &rng) {
  const std::size_t n = points.size();
  std::vector<Point2> centroids;
  centroids.reserve(static_cast<std::size_t>(k));
  centroids.push_back(points[rng.below(n)]);
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d2[i] = sq_dist(points[i], centroids[0]);
  }
  while (static_cast<int>(centroids.size()) < k) {
    double total = 0.0;
    for (double v : d2) {
      total += v;
    }
    std::size_t pick = 0;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      pick = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc > target && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      // Every point already sits on a centroid (duplicates).
      pick = rng.below(n);
    }
    centroids.push_back(points[pick]);
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], sq_dist(points[i], centroids.back()));
    }
  }
  return centroids;
}

} // namespace

double clustering_objective(std::span<const Point2> points, std::span<const Point2> centroids,
                            std::span<const int> label) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    total += sq_dist(points[i], centroids[static_cast<std::size_t>(label[i])]);
  }
  return total;
}

Clustering lloyd(std::span<const Point2> points, int k, std::uint64_t seed, int max_iter,
                 std::vector<double> *history) {
  const std::size_t n = points.size();
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw Error(Errc::invalid_argument, "lloyd: need 1 <= k <= number of points");
  }
  Rng rng(seed);
  Clustering out;
  out.centroids = seed_plus_plus(points, k, rng);
  out.label.assign(n, -1);

  for (int iter = 0; iter < std::max(1, max_iter); ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const int c = nearest(points[i], out.centroids);
      if (c != out.label[i]) {
        out.label[i] = c;
        changed = true;
      }
    }

    // Empty clusters take over the worst-served point.
    for (int c = 0; c < k; ++c) {
      if (std::find(out.label.begin(), out.label.end(), c) != out.label.end()) {
        continue;
      }
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto owner = static_cast<std::size_t>(out.label[i]);
        // Never strip the only member of another cluster.
        if (std::count(out.label.begin(), out.label.end(), out.label[i]) < 2) {
          continue;
        }
        const double d = sq_dist(points[i], out.centroids[owner]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      out.label[far] = c;
      out.centroids[static_cast<std::size_t>(c)] = points[far];
      changed = true;
    }

    std::vector<Point2> sum(static_cast<std::size_t>(k));
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(out.label[i]);
      sum[c].x += points[i].x;
      sum[c].y += points[i].y;
      ++count[c];
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c) {
      out.centroids[c] = {sum[c].x / count[c], sum[c].y / count[c]};
    }
    out.iterations = iter + 1;
    if (history != nullptr) {
      history->push_back(clustering_objective(points, out.centroids, out.label));
    }
    if (!changed) {
      break;
    }
  }
  out.objective = clustering_objective(points, out.centroids, out.label);
  return out;
}

Clustering kmeans(std::span<const Point2> points, int k, std::uint64_t seed,
                  const KmeansOptions &opts) {
  Clustering best;
  best.objective = std::numeric_limits<double>::infinity();
  int total_iterations = 0;
  for (int r = 0; r < std::max(1, opts.restarts); ++r) {
    Clustering run = lloyd(points, k, derive_seed(seed, static_cast<std::uint64_t>(r)), opts.max_iter);
    total_iterations += run.iterations;
    if (run.objective < best.objective) {
      best = std::move(run);
    }
  }
  best.iterations = total_iterations;
  return best;
}

std::optional<int> UavDeployment::uav_of(int user) const {
  const auto it = std::lower_bound(users.begin(), users.end(), user);
  if (it == users.end() || *it != user) {
    return std::nullopt;
  }
  return serving[static_cast<std::size_t>(it - users.begin())];
}

std::vector<int> UavDeployment::members(int uav) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < users.size(); ++i) {
    if (serving[i] == uav) {
      out.push_back(users[i]);
    }
  }
  return out;
}

UavDeployment kmeans_place(std::span<const int> users, const Scenario &scenario, int k,
                           std::uint64_t seed, const KmeansOptions &opts) {
  UavDeployment out;
  out.users.assign(users.begin(), users.end());
  std::sort(out.users.begin(), out.users.end());
  if (out.users.empty()) {
    if (k > 0) {
      throw Error(Errc::empty_zone, "kmeans_place: UAV zone is empty but k > 0");
    }
    return out;
  }
  if (k < 1 || k > static_cast<int>(out.users.size())) {
    throw Error(Errc::invalid_argument, "kmeans_place: need 1 <= k <= |B|");
  }
  std::vector<Point2> pts;
  pts.reserve(out.users.size());
  for (int u : out.users) {
    const Point3 &p = scenario.users.at(static_cast<std::size_t>(u));
    pts.push_back({p.x, p.y});
  }
  const Clustering c = kmeans(pts, k, seed, opts);
  for (const Point2 &centroid : c.centroids) {
    out.uavs.push_back({centroid.x, centroid.y, scenario.uav_altitude});
  }
  out.serving = c.label;
  out.kmeans_objective = c.objective;
  out.lloyd_iterations = c.iterations;
  return out;
}

double true_total_pathloss(const UavDeployment &deployment, const Scenario &scenario) {
  double total = 0.0;
  for (std::size_t i = 0; i < deployment.users.size(); ++i) {
    const Point3 &user = scenario.users.at(static_cast<std::size_t>(deployment.users[i]));
    const Point3 &uav = deployment.uavs.at(static_cast<std::size_t>(deployment.serving[i]));
    total += uav_avg_pathloss(user, uav, scenario.radio);
  }
  return total;
}

double pathloss_upper_bound(const UavDeployment &deployment, const Scenario &scenario,
                            std::optional<int> initial_uavs) {
  const RadioParams &radio = scenario.radio;
  if (radio.pathloss_exponent != 2.0) {
    throw Error(Errc::invalid_alpha, "path-loss upper bound holds only for alpha = 2");
  }
  const double n0 = initial_uavs ? *initial_uavs : static_cast<double>(deployment.users.size());
  const double k = 4.0 * std::numbers::pi * radio.carrier_hz / radio.speed_mps;
  const double z = scenario.uav_altitude;
  return radio.eta_nlos * k * k *
         (z * z * scenario.user_count() * n0 + deployment.kmeans_objective);
}

} // namespace hapsplan
