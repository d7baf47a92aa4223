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

#ifndef HAPSPLAN_CONFIG_HPP
#define HAPSPLAN_CONFIG_HPP

#include "hapsplan/optimizer.hpp"
#include "hapsplan/scenario.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace hapsplan {

// A scenario template plus optimizer settings. Users are either listed
// explicitly or drawn per seed.
struct ExperimentConfig {
  Scenario scenario;                    // users empty unless listed in the config
  int user_count = 20;
  bool explicit_users = false;
  double attempts_per_user = kDefaultAttemptsPerUser;
  OptimizerConfig optimizer;
};

// Parses the config schema documented in the README. Unknown keys and
// out-of-range values throw Errc::config with the offending field named.
ExperimentConfig parse_config(const nlohmann::ordered_json &doc);
ExperimentConfig load_config(const std::filesystem::path &path);

// The same schema with every field spelled out; dB fields are recomputed
// from the stored linear values.
nlohmann::ordered_json to_json(const ExperimentConfig &config);

// The concrete scenario for one seed: listed users, or a fresh draw.
Scenario make_scenario(const ExperimentConfig &config, std::uint64_t seed);

// Field-level problems of the template and the optimizer settings.
std::vector<Violation> validate(const ExperimentConfig &config);

} // namespace hapsplan

#endif
