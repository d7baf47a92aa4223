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

#ifndef HAPSPLAN_CLI_HPP
#define HAPSPLAN_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hapsplan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitOutage = 2;

struct RunOptions {
  std::string config_path;  // empty: built-in case-study defaults
  std::uint64_t seed = 0;
  std::string out;          // empty: stdout
  std::string format = "json";
  std::string regime = "all";
  std::string spec_path;
  int threads = 0;
};

// Each command returns a process exit code: 0 on success, 2 when the written
// solution still has users in outage, 1 on config or IO errors (the
// diagnostic names the offending field or path).
int cmd_solve(const RunOptions &options, std::ostream &out, std::ostream &err);
int cmd_baseline(const RunOptions &options, std::ostream &out, std::ostream &err);
int cmd_sweep(const RunOptions &options, std::ostream &out, std::ostream &err);
int cmd_validate(const RunOptions &options, std::ostream &out, std::ostream &err);

// Parses argv and dispatches to one of the commands above.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hapsplan

#endif
