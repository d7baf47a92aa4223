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

#ifndef HAPSPLAN_ERROR_HPP
#define HAPSPLAN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hapsplan {

enum class Errc {
  invalid_argument,
  placement_budget_exhausted,
  degenerate_geometry,
  unassigned_link,
  unassigned_user,
  insufficient_elements,
  empty_zone,
  invalid_alpha,
  no_subcarriers_for_user,
  not_achievable,
  config,
  io,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace hapsplan

#endif
