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

#include "hapsplan/report.hpp"

#include "hapsplan/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace hapsplan {

namespace {

using nlohmann::ordered_json;

constexpr const char *kSchema = "hapsplan.solution/1";

ordered_json num(double x) {
  if (std::isnan(x)) {
    return nullptr;
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  return x;
}

double get_num(const ordered_json &v) {
  if (v.is_null()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    if (s == "-inf") {
      return -std::numeric_limits<double>::infinity();
    }
    throw Error(Errc::config, "expected a number, got \"" + s + "\"");
  }
  return v.get<double>();
}

ordered_json point_json(const Point3 &p) { return ordered_json::array({p.x, p.y, p.z}); }

Point3 point_from(const ordered_json &v) {
  return {v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>()};
}

std::string_view server_name(Server s) {
  switch (s) {
  case Server::none: return "none";
  case Server::haps: return "haps";
  case Server::uav: return "uav";
  }
  return "none";
}

Server parse_server(const std::string &s) {
  if (s == "haps") {
    return Server::haps;
  }
  if (s == "uav") {
    return Server::uav;
  }
  if (s == "none") {
    return Server::none;
  }
  throw Error(Errc::config, "unknown server \"" + s + "\"");
}

ordered_json split_json(const BandwidthSplit &s) {
  return {{"kappa", num(s.kappa)}, {"L_cs", s.cs}, {"L_uav", s.uav}};
}

BandwidthSplit split_from(const ordered_json &v) {
  return {get_num(v.at("kappa")), v.at("L_cs").get<int>(), v.at("L_uav").get<int>()};
}

double to_db_or_nan(double linear) {
  return linear > 0.0 ? linear_to_db(linear) : std::numeric_limits<double>::quiet_NaN();
}

// Integers print plainly, everything else in the shortest round-trip form;
// NaN becomes an empty cell.
std::string cell(double x) {
  if (std::isnan(x)) {
    return "";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const bool integral = x == std::floor(x) && std::abs(x) < 1e15;
  const auto res = integral ? std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed)
                            : std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string quoted(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') {
      q += '"';
    }
    q += c;
  }
  return q + '"';
}

void header(std::ostream &out, const std::vector<std::string> &cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "," : "") << cols[i];
  }
  out << '\n';
}

template <class... T>
void row(std::ostream &out, const T &...fields) {
  bool first = true;
  ((out << (first ? "" : ",") << fields, first = false), ...);
  out << '\n';
}

} // namespace

ordered_json to_json(const ParetoSolution &s) {
  ordered_json doc;
  doc["kappa"] = num(s.kappa);
  doc["split"] = split_json(s.split);
  doc["R_star_m"] = s.radius;
  doc["N_uav"] = s.n_uav;
  doc["N_uav_init"] = s.initial_uavs;
  doc["U_haps"] = s.u_haps;
  doc["outage_users"] = s.outage_users;
  doc["lambda_true"] = num(s.lambda_true);
  doc["lambda_upp"] = num(s.lambda_upp);

  ordered_json dep;
  ordered_json uavs = ordered_json::array();
  for (const Point3 &p : s.deployment.uavs) {
    uavs.push_back(point_json(p));
  }
  dep["uavs"] = uavs;
  dep["users"] = s.deployment.users;
  dep["serving"] = s.deployment.serving;
  dep["kmeans_objective"] = s.deployment.kmeans_objective;
  dep["lloyd_iterations"] = s.deployment.lloyd_iterations;
  doc["deployment"] = dep;

  const AllocationPlan &p = s.plan;
  ordered_json plan;
  plan["zone"] = {{"radius", p.zone.radius},
                  {"uav_zone", p.zone.uav_zone},
                  {"haps_zone", p.zone.haps_zone}};
  plan["split"] = split_json(p.split);
  plan["ris"] = {{"users", p.ris.users},
                 {"slot_of_user", p.ris.slot_of_user},
                 {"elements_per_cluster", p.ris.elements_per_cluster}};
  plan["n_uav"] = p.n_uav;
  ordered_json users = ordered_json::array();
  for (const UserAllocation &a : p.users) {
    users.push_back({{"server", server_name(a.server)},
                     {"uav", a.uav},
                     {"subcarriers", a.subcarriers},
                     {"power_w", a.power_w},
                     {"ris", {a.ris.first, a.ris.count}}});
  }
  plan["users"] = users;
  doc["plan"] = plan;

  ordered_json rates = ordered_json::array();
  for (double r : s.rate_bps) {
    rates.push_back(num(r));
  }
  doc["rate_bps"] = rates;
  return doc;
}

ParetoSolution solution_from_json(const ordered_json &doc) {
  ParetoSolution s;
  s.kappa = get_num(doc.at("kappa"));
  s.split = split_from(doc.at("split"));
  s.radius = doc.at("R_star_m").get<double>();
  s.n_uav = doc.at("N_uav").get<int>();
  s.initial_uavs = doc.at("N_uav_init").get<int>();
  s.u_haps = doc.at("U_haps").get<int>();
  s.outage_users = doc.at("outage_users").get<std::vector<int>>();
  s.lambda_true = get_num(doc.at("lambda_true"));
  s.lambda_upp = get_num(doc.at("lambda_upp"));

  const ordered_json &dep = doc.at("deployment");
  for (const ordered_json &p : dep.at("uavs")) {
    s.deployment.uavs.push_back(point_from(p));
  }
  s.deployment.users = dep.at("users").get<std::vector<int>>();
  s.deployment.serving = dep.at("serving").get<std::vector<int>>();
  s.deployment.kmeans_objective = dep.at("kmeans_objective").get<double>();
  s.deployment.lloyd_iterations = dep.at("lloyd_iterations").get<int>();

  const ordered_json &plan = doc.at("plan");
  AllocationPlan &p = s.plan;
  p.zone.radius = plan.at("zone").at("radius").get<double>();
  p.zone.uav_zone = plan.at("zone").at("uav_zone").get<std::vector<int>>();
  p.zone.haps_zone = plan.at("zone").at("haps_zone").get<std::vector<int>>();
  p.split = split_from(plan.at("split"));
  p.ris.users = plan.at("ris").at("users").get<std::vector<int>>();
  p.ris.slot_of_user = plan.at("ris").at("slot_of_user").get<std::vector<int>>();
  p.ris.elements_per_cluster = plan.at("ris").at("elements_per_cluster").get<std::int64_t>();
  p.n_uav = plan.at("n_uav").get<int>();
  for (const ordered_json &u : plan.at("users")) {
    UserAllocation a;
    a.server = parse_server(u.at("server").get<std::string>());
    a.uav = u.at("uav").get<int>();
    a.subcarriers = u.at("subcarriers").get<std::vector<int>>();
    a.power_w = u.at("power_w").get<std::vector<double>>();
    a.ris = {u.at("ris").at(0).get<std::int64_t>(), u.at("ris").at(1).get<std::int64_t>()};
    p.users.push_back(std::move(a));
  }
  for (const ordered_json &r : doc.at("rate_bps")) {
    s.rate_bps.push_back(get_num(r));
  }
  return s;
}

ordered_json to_json(const KappaTrace &t) {
  return {{"kappa", num(t.kappa)},
          {"L_cs", t.l_cs},
          {"L_uav", t.l_uav},
          {"R_star_m", t.radius},
          {"U_haps", t.u_haps},
          {"N_uav", t.n_uav},
          {"outage_count", t.outage},
          {"lambda_true", num(t.lambda_true)},
          {"lambda_upp", num(t.lambda_upp)},
          {"radius_steps", t.radius_steps},
          {"uav_steps", t.uav_steps},
          {"lloyd_iterations", t.lloyd_iterations}};
}

KappaTrace trace_from_json(const ordered_json &doc) {
  KappaTrace t;
  t.kappa = get_num(doc.at("kappa"));
  t.l_cs = doc.at("L_cs").get<int>();
  t.l_uav = doc.at("L_uav").get<int>();
  t.radius = doc.at("R_star_m").get<double>();
  t.u_haps = doc.at("U_haps").get<int>();
  t.n_uav = doc.at("N_uav").get<int>();
  t.outage = doc.at("outage_count").get<int>();
  t.lambda_true = get_num(doc.at("lambda_true"));
  t.lambda_upp = get_num(doc.at("lambda_upp"));
  t.radius_steps = doc.at("radius_steps").get<int>();
  t.uav_steps = doc.at("uav_steps").get<int>();
  t.lloyd_iterations = doc.at("lloyd_iterations").get<int>();
  return t;
}

ordered_json solve_artifact(const SolveResult &result, const Scenario &scenario,
                            std::uint64_t seed) {
  const ParetoSolution &s = result.best;
  const RadioParams &r = scenario.radio;
  ordered_json doc;
  doc["schema"] = kSchema;
  doc["seed"] = seed;

  ordered_json sc;
  ordered_json users = ordered_json::array();
  for (const Point3 &u : scenario.users) {
    users.push_back(point_json(u));
  }
  sc["users"] = users;
  sc["R0_m"] = scenario.coverage_radius;
  sc["D0_m"] = scenario.min_separation;
  sc["uav_altitude_m"] = scenario.uav_altitude;
  sc["fc_hz"] = r.carrier_hz;
  sc["alpha"] = r.pathloss_exponent;
  sc["L_tot"] = scenario.subcarriers_total;
  sc["BW_hz"] = scenario.bandwidth_hz;
  sc["M"] = scenario.ris_elements;
  sc["r0_bps"] = scenario.min_rate_bps;
  sc["P_cs_dbm"] = watts_to_dbm(scenario.cs_power_w);
  sc["P_cs_w"] = scenario.cs_power_w;
  sc["P_uav_dbm"] = watts_to_dbm(scenario.uav_power_w);
  sc["P_uav_w"] = scenario.uav_power_w;
  sc["N0_dbm_hz"] = watts_to_dbm(r.noise_psd_w_per_hz);
  sc["N0_w_hz"] = r.noise_psd_w_per_hz;
  sc["G_cs_db"] = linear_to_db(r.gain_cs);
  sc["G_cs"] = r.gain_cs;
  doc["scenario"] = sc;

  const int n_users = scenario.user_count();
  doc["summary"] = {{"kappa_opt", num(s.kappa)},
                    {"L_cs", s.split.cs},
                    {"L_uav", s.split.uav},
                    {"R_star_m", s.radius},
                    {"U_haps", s.u_haps},
                    {"coverage_pct", n_users > 0 ? 100.0 * s.u_haps / n_users : 0.0},
                    {"N_uav", s.n_uav},
                    {"outage_count", s.outage_users.size()},
                    {"lambda_true_dB", num(to_db_or_nan(s.lambda_true))},
                    {"lambda_upp_dB", num(to_db_or_nan(s.lambda_upp))},
                    {"early_stopped", result.early_stopped}};
  doc["solution"] = to_json(s);
  ordered_json trace = ordered_json::array();
  for (const KappaTrace &t : result.trace) {
    trace.push_back(to_json(t));
  }
  doc["trace"] = trace;
  return doc;
}

SolveResult solve_result_from_artifact(const ordered_json &doc) {
  if (doc.value("schema", "") != kSchema) {
    throw Error(Errc::config, std::string("schema: expected ") + kSchema);
  }
  SolveResult r;
  r.best = solution_from_json(doc.at("solution"));
  for (const ordered_json &t : doc.at("trace")) {
    r.trace.push_back(trace_from_json(t));
  }
  r.early_stopped = doc.at("summary").at("early_stopped").get<bool>();
  return r;
}

void write_user_csv(std::ostream &out, const ParetoSolution &s, const Scenario &scenario) {
  header(out, kUserCsvColumns);
  for (int i = 0; i < scenario.user_count(); ++i) {
    const UserAllocation &a = s.plan.users[static_cast<std::size_t>(i)];
    const Point3 &u = scenario.users[static_cast<std::size_t>(i)];
    std::string subs;
    double power = 0.0;
    for (std::size_t k = 0; k < a.subcarriers.size(); ++k) {
      subs += (k ? " " : "") + std::to_string(a.subcarriers[k]);
      power += a.power_w[k];
    }
    const double rate = s.rate_bps.empty() ? 0.0 : s.rate_bps[static_cast<std::size_t>(i)];
    const bool in_b = std::binary_search(s.plan.zone.uav_zone.begin(), s.plan.zone.uav_zone.end(), i);
    const bool outage = std::binary_search(s.outage_users.begin(), s.outage_users.end(), i);
    row(out, i, cell(u.x), cell(u.y), in_b ? "B" : "C", server_name(a.server), a.uav,
        a.subcarriers.size(), subs, cell(power), a.ris.first, a.ris.count, cell(rate),
        outage ? 0 : 1);
  }
}

void write_summary_csv(std::ostream &out, const SolveResult &result, const Scenario &scenario,
                       std::uint64_t seed) {
  const ParetoSolution &s = result.best;
  header(out, kSummaryCsvColumns);
  row(out, seed, cell(s.kappa), s.split.cs, s.split.uav, cell(s.radius), s.u_haps,
      cell(100.0 * s.u_haps / scenario.user_count()), s.n_uav, s.initial_uavs,
      s.outage_users.size(), cell(s.lambda_true), cell(to_db_or_nan(s.lambda_true)),
      cell(s.lambda_upp), cell(to_db_or_nan(s.lambda_upp)), result.early_stopped ? 1 : 0);
}

void write_trace_csv(std::ostream &out, const std::vector<KappaTrace> &trace) {
  header(out, kTraceCsvColumns);
  for (const KappaTrace &t : trace) {
    row(out, cell(t.kappa), t.l_cs, t.l_uav, cell(t.radius), t.u_haps, t.n_uav, t.outage,
        cell(to_db_or_nan(t.lambda_true)), cell(to_db_or_nan(t.lambda_upp)), t.radius_steps,
        t.uav_steps, t.lloyd_iterations);
  }
}

void write_sweep_csv(std::ostream &out, const SweepResult &result) {
  header(out, kSweepCsvColumns);
  for (const SweepRow &r : result.rows) {
    row(out, cell(r.value), r.seed, r.u_haps, cell(r.coverage_pct), r.n_uav,
        cell(r.lambda_true_db), cell(r.lambda_upp_db), cell(r.r_star), r.outage_count,
        cell(r.wall_ms), quoted(r.error));
  }
}

void write_compare_csv(std::ostream &out, const std::vector<CompareRow> &rows,
                       const Scenario &scenario) {
  header(out, kCompareCsvColumns);
  for (const CompareRow &r : rows) {
    const ParetoSolution &s = r.solution;
    row(out, to_string(r.regime), cell(s.kappa), s.u_haps,
        cell(100.0 * s.u_haps / scenario.user_count()), s.n_uav, s.outage_users.size(),
        cell(to_db_or_nan(s.lambda_upp)));
  }
}

} // namespace hapsplan
