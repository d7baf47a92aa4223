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

#include "hapsplan/config.hpp"

#include "hapsplan/error.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

namespace hapsplan {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string &field, const std::string &message) {
  throw Error(Errc::config, field + ": " + message);
}

void reject_unknown(const ordered_json &obj, const std::set<std::string> &known,
                    const std::string &prefix) {
  for (const auto &item : obj.items()) {
    if (!known.contains(item.key())) {
      fail(prefix + item.key(), "unknown key");
    }
  }
}

double number_at(const ordered_json &v, const std::string &field) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    fail(field, "expected a number, got string \"" + s + "\"");
  }
  if (!v.is_number()) {
    fail(field, "expected a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    fail(field, "must be finite");
  }
  return x;
}

void read_number(const ordered_json &obj, const char *key, double &target,
                 const std::string &prefix = "") {
  if (obj.contains(key)) {
    target = number_at(obj.at(key), prefix + key);
  }
}

void read_int(const ordered_json &obj, const char *key, int &target,
              const std::string &prefix = "") {
  if (!obj.contains(key)) {
    return;
  }
  const ordered_json &v = obj.at(key);
  if (!v.is_number_integer()) {
    fail(prefix + key, "expected an integer");
  }
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    fail(prefix + key, "out of range");
  }
  target = static_cast<int>(x);
}

void read_bool(const ordered_json &obj, const char *key, bool &target,
               const std::string &prefix = "") {
  if (obj.contains(key)) {
    if (!obj.at(key).is_boolean()) {
      fail(prefix + key, "expected true or false");
    }
    target = obj.at(key).get<bool>();
  }
}

Point3 point_at(const ordered_json &v, const std::string &field) {
  if (v.is_array() && (v.size() == 2 || v.size() == 3)) {
    Point3 p{number_at(v[0], field + "[0]"), number_at(v[1], field + "[1]"), 0.0};
    if (v.size() == 3) {
      p.z = number_at(v[2], field + "[2]");
    }
    return p;
  }
  if (v.is_object()) {
    reject_unknown(v, {"x", "y", "z"}, field + ".");
    Point3 p;
    read_number(v, "x", p.x, field + ".");
    read_number(v, "y", p.y, field + ".");
    read_number(v, "z", p.z, field + ".");
    return p;
  }
  fail(field, "expected [x, y], [x, y, z] or {\"x\", \"y\", \"z\"}");
}

void read_point(const ordered_json &obj, const char *key, Point3 &target) {
  if (obj.contains(key)) {
    target = point_at(obj.at(key), key);
  }
}

void read_db(const ordered_json &obj, const char *key, double &linear) {
  if (obj.contains(key)) {
    linear = db_to_linear(number_at(obj.at(key), key));
  }
}

void read_dbm(const ordered_json &obj, const char *key, double &watts) {
  if (obj.contains(key)) {
    watts = dbm_to_watts(number_at(obj.at(key), key));
  }
}

ordered_json kappa_json(double k) {
  return std::isinf(k) ? ordered_json("inf") : ordered_json(k);
}

ordered_json point_json(const Point3 &p) { return ordered_json::array({p.x, p.y, p.z}); }

OptimizerConfig parse_optimizer(const ordered_json &obj) {
  const std::string prefix = "optimizer.";
  if (!obj.is_object()) {
    fail("optimizer", "expected an object");
  }
  reject_unknown(obj,
                 {"kappa_grid", "Q_max", "delta_R_m", "delta_N", "T", "T_prime", "epsilon",
                  "N_uav_init", "early_stop", "kmeans_max_iter", "kmeans_restarts"},
                 prefix);
  OptimizerConfig c;
  if (obj.contains("kappa_grid")) {
    const ordered_json &g = obj.at("kappa_grid");
    if (!g.is_array() || g.empty()) {
      fail(prefix + "kappa_grid", "expected a non-empty array");
    }
    for (std::size_t q = 0; q < g.size(); ++q) {
      c.kappa_grid.push_back(number_at(g[q], prefix + "kappa_grid[" + std::to_string(q) + "]"));
    }
    c.max_outer = static_cast<int>(c.kappa_grid.size());
  }
  read_int(obj, "Q_max", c.max_outer, prefix);
  read_number(obj, "delta_R_m", c.radius_step, prefix);
  read_int(obj, "delta_N", c.uav_step, prefix);
  read_int(obj, "T", c.radius_iterations, prefix);
  read_int(obj, "T_prime", c.uav_iterations, prefix);
  read_number(obj, "epsilon", c.epsilon, prefix);
  read_bool(obj, "early_stop", c.early_stop, prefix);
  read_int(obj, "kmeans_max_iter", c.kmeans.max_iter, prefix);
  read_int(obj, "kmeans_restarts", c.kmeans.restarts, prefix);
  if (obj.contains("N_uav_init")) {
    const ordered_json &v = obj.at("N_uav_init");
    if (v.is_string() && v.get<std::string>() == "auto") {
      c.initial_uavs.reset();
    } else {
      int n = 0;
      read_int(obj, "N_uav_init", n, prefix);
      c.initial_uavs = n;
    }
  }
  return c;
}

} // namespace

ExperimentConfig parse_config(const ordered_json &doc) {
  if (!doc.is_object()) {
    fail("<root>", "expected a JSON object");
  }
  reject_unknown(doc,
                 {"users", "R0_m", "D0_m", "coverage_center_m", "cs_pos_m", "haps_pos_m",
                  "uav_altitude_m", "fc_hz", "c_mps", "alpha", "eta1", "eta2", "psi", "beta",
                  "N0_dbm_hz", "G_cs_db", "G_uav_db", "G_user_db", "P_cs_dbm", "P_uav_dbm",
                  "L_tot", "BW_hz", "M", "r0_bps", "mu", "strict_cross_uav_orthogonality",
                  "placement_attempts_per_user", "optimizer"},
                 "");
  ExperimentConfig c;
  Scenario &s = c.scenario;
  RadioParams &r = s.radio;

  if (doc.contains("users")) {
    const ordered_json &u = doc.at("users");
    if (u.is_number_integer()) {
      read_int(doc, "users", c.user_count);
    } else if (u.is_array()) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        s.users.push_back(point_at(u[i], "users[" + std::to_string(i) + "]"));
      }
      c.explicit_users = true;
      c.user_count = static_cast<int>(s.users.size());
    } else {
      fail("users", "expected a user count or a list of positions");
    }
  }
  read_number(doc, "R0_m", s.coverage_radius);
  read_number(doc, "D0_m", s.min_separation);
  read_point(doc, "coverage_center_m", s.coverage_center);
  read_point(doc, "cs_pos_m", s.cs_pos);
  read_point(doc, "haps_pos_m", s.haps_pos);
  read_number(doc, "uav_altitude_m", s.uav_altitude);
  read_number(doc, "fc_hz", r.carrier_hz);
  read_number(doc, "c_mps", r.speed_mps);
  read_number(doc, "alpha", r.pathloss_exponent);
  read_number(doc, "eta1", r.eta_los);
  read_number(doc, "eta2", r.eta_nlos);
  read_number(doc, "psi", r.los_psi);
  read_number(doc, "beta", r.los_beta);
  if (doc.contains("N0_dbm_hz")) {
    r.noise_psd_w_per_hz = dbm_to_watts(number_at(doc.at("N0_dbm_hz"), "N0_dbm_hz"));
  }
  read_db(doc, "G_cs_db", r.gain_cs);
  read_db(doc, "G_uav_db", r.gain_uav);
  read_db(doc, "G_user_db", r.gain_user);
  read_dbm(doc, "P_cs_dbm", s.cs_power_w);
  read_dbm(doc, "P_uav_dbm", s.uav_power_w);
  read_int(doc, "L_tot", s.subcarriers_total);
  read_number(doc, "BW_hz", s.bandwidth_hz);
  if (doc.contains("M")) {
    const ordered_json &m = doc.at("M");
    if (m.is_number_integer()) {
      s.ris_elements = m.get<std::int64_t>();
    } else {
      const double x = number_at(m, "M");
      if (x != std::floor(x) || x < 0.0 || x > 9e15) {
        fail("M", "expected a non-negative integer element count");
      }
      s.ris_elements = static_cast<std::int64_t>(x);
    }
  }
  read_number(doc, "r0_bps", s.min_rate_bps);
  read_number(doc, "mu", r.reflection_efficiency);
  read_bool(doc, "strict_cross_uav_orthogonality", s.strict_cross_uav_orthogonality);
  read_number(doc, "placement_attempts_per_user", c.attempts_per_user);
  if (doc.contains("optimizer")) {
    c.optimizer = parse_optimizer(doc.at("optimizer"));
  }

  const std::vector<Violation> problems = validate(c);
  if (!problems.empty()) {
    fail(problems.front().field, problems.front().message);
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io, "cannot open config file " + path.string());
  }
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(Errc::config, path.string() + ": invalid JSON: " + e.what());
  }
  return parse_config(doc);
}

ordered_json to_json(const ExperimentConfig &c) {
  const Scenario &s = c.scenario;
  const RadioParams &r = s.radio;
  ordered_json doc;
  if (c.explicit_users) {
    ordered_json users = ordered_json::array();
    for (const Point3 &u : s.users) {
      users.push_back(point_json(u));
    }
    doc["users"] = users;
  } else {
    doc["users"] = c.user_count;
  }
  doc["R0_m"] = s.coverage_radius;
  doc["D0_m"] = s.min_separation;
  doc["coverage_center_m"] = point_json(s.coverage_center);
  doc["cs_pos_m"] = point_json(s.cs_pos);
  doc["haps_pos_m"] = point_json(s.haps_pos);
  doc["uav_altitude_m"] = s.uav_altitude;
  doc["fc_hz"] = r.carrier_hz;
  doc["c_mps"] = r.speed_mps;
  doc["alpha"] = r.pathloss_exponent;
  doc["eta1"] = r.eta_los;
  doc["eta2"] = r.eta_nlos;
  doc["psi"] = r.los_psi;
  doc["beta"] = r.los_beta;
  doc["N0_dbm_hz"] = watts_to_dbm(r.noise_psd_w_per_hz);
  doc["G_cs_db"] = linear_to_db(r.gain_cs);
  doc["G_uav_db"] = linear_to_db(r.gain_uav);
  doc["G_user_db"] = linear_to_db(r.gain_user);
  doc["P_cs_dbm"] = watts_to_dbm(s.cs_power_w);
  doc["P_uav_dbm"] = watts_to_dbm(s.uav_power_w);
  doc["L_tot"] = s.subcarriers_total;
  doc["BW_hz"] = s.bandwidth_hz;
  doc["M"] = s.ris_elements;
  doc["r0_bps"] = s.min_rate_bps;
  doc["mu"] = r.reflection_efficiency;
  doc["strict_cross_uav_orthogonality"] = s.strict_cross_uav_orthogonality;
  doc["placement_attempts_per_user"] = c.attempts_per_user;

  const OptimizerConfig &o = c.optimizer;
  ordered_json opt;
  ordered_json grid = ordered_json::array();
  for (double k : o.grid()) {
    grid.push_back(kappa_json(k));
  }
  opt["kappa_grid"] = grid;
  opt["Q_max"] = o.max_outer;
  opt["delta_R_m"] = o.radius_step;
  opt["delta_N"] = o.uav_step;
  opt["T"] = o.radius_iterations;
  opt["T_prime"] = o.uav_iterations;
  opt["epsilon"] = o.epsilon;
  opt["N_uav_init"] = o.initial_uavs ? ordered_json(*o.initial_uavs) : ordered_json("auto");
  opt["early_stop"] = o.early_stop;
  opt["kmeans_max_iter"] = o.kmeans.max_iter;
  opt["kmeans_restarts"] = o.kmeans.restarts;
  doc["optimizer"] = opt;
  return doc;
}

Scenario make_scenario(const ExperimentConfig &config, std::uint64_t seed) {
  Scenario s = config.scenario;
  if (!config.explicit_users) {
    s.users = generate_users(config.user_count, s.coverage_radius, s.min_separation, seed,
                             config.attempts_per_user);
    for (Point3 &u : s.users) {
      u.x += s.coverage_center.x;
      u.y += s.coverage_center.y;
    }
  }
  return s;
}

std::vector<Violation> validate(const ExperimentConfig &config) {
  std::vector<Violation> out = validate(config.scenario);
  if (config.explicit_users ? config.scenario.users.empty() : config.user_count < 1) {
    out.push_back({"users", "at least one user"});
  }
  if (!(config.attempts_per_user >= 1.0)) {
    out.push_back({"placement_attempts_per_user", "must be >= 1"});
  }
  for (const std::string &msg : validate(config.optimizer)) {
    const auto colon = msg.find(':');
    out.push_back({"optimizer." + msg.substr(0, colon), msg.substr(colon + 2)});
  }
  return out;
}

} // namespace hapsplan
