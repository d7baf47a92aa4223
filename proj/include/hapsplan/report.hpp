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

#ifndef HAPSPLAN_REPORT_HPP
#define HAPSPLAN_REPORT_HPP

#include "hapsplan/optimizer.hpp"
#include "hapsplan/sweep.hpp"

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hapsplan {

// Solution artifact. Infinite kappa is written as "inf" and NaN as null;
// from_json reverses both, so solution_from_json(to_json(s)) == s.
nlohmann::ordered_json to_json(const ParetoSolution &solution);
ParetoSolution solution_from_json(const nlohmann::ordered_json &doc);

nlohmann::ordered_json to_json(const KappaTrace &trace);
KappaTrace trace_from_json(const nlohmann::ordered_json &doc);

// {"schema", "seed", "scenario", "summary", "solution", "trace"}. The
// "scenario" block carries both dB and linear values.
nlohmann::ordered_json solve_artifact(const SolveResult &result, const Scenario &scenario,
                                      std::uint64_t seed);
SolveResult solve_result_from_artifact(const nlohmann::ordered_json &doc);

inline const std::vector<std::string> kUserCsvColumns{
    "user", "x_m", "y_m", "zone", "server", "uav", "n_subcarriers", "subcarriers",
    "power_w", "ris_first", "ris_count", "rate_bps", "meets_r0"};
inline const std::vector<std::string> kSummaryCsvColumns{
    "seed", "kappa_opt", "L_cs", "L_uav", "R_star_m", "U_haps", "coverage_pct", "N_uav",
    "N_uav_init", "outage_count", "lambda_true", "lambda_true_dB", "lambda_upp",
    "lambda_upp_dB", "early_stopped"};
inline const std::vector<std::string> kTraceCsvColumns{
    "kappa", "L_cs", "L_uav", "R_star_m", "U_haps", "N_uav", "outage_count", "lambda_true_dB",
    "lambda_upp_dB", "radius_steps", "uav_steps", "lloyd_iterations"};
inline const std::vector<std::string> kSweepCsvColumns{
    "value", "seed", "U_haps", "coverage_pct", "N_uav", "lambda_true_dB", "lambda_upp_dB",
    "R_star", "outage_count", "wall_ms", "error"};
inline const std::vector<std::string> kCompareCsvColumns{
    "regime", "kappa", "U_haps", "coverage_pct", "N_uav", "outage", "lambda_upp_dB"};

void write_user_csv(std::ostream &out, const ParetoSolution &solution, const Scenario &scenario);
void write_summary_csv(std::ostream &out, const SolveResult &result, const Scenario &scenario,
                       std::uint64_t seed);
void write_trace_csv(std::ostream &out, const std::vector<KappaTrace> &trace);
void write_sweep_csv(std::ostream &out, const SweepResult &result);

struct CompareRow {
  Regime regime;
  ParetoSolution solution;
};
void write_compare_csv(std::ostream &out, const std::vector<CompareRow> &rows,
                       const Scenario &scenario);

} // namespace hapsplan

#endif
