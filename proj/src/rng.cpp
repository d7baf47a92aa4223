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

#include "hapsplan/rng.hpp"
#include "hapsplan/error.hpp"

namespace hapsplan {

std::string_view to_string(Errc code) {
  switch (code) {
  case Errc::invalid_argument: return "invalid-argument";
  case Errc::placement_budget_exhausted: return "placement-budget-exhausted";
  case Errc::degenerate_geometry: return "degenerate-geometry";
  case Errc::unassigned_link: return "unassigned-link";
  case Errc::unassigned_user: return "unassigned-user";
  case Errc::insufficient_elements: return "insufficient-elements";
  case Errc::empty_zone: return "empty-zone";
  case Errc::invalid_alpha: return "invalid-alpha";
  case Errc::no_subcarriers_for_user: return "no-subcarriers-for-user";
  case Errc::not_achievable: return "not-achievable";
  case Errc::config: return "config";
  case Errc::io: return "io";
  }
  return "unknown";
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(mix64(base) ^ (stream * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) {
    throw Error(Errc::invalid_argument, "Rng::below: empty range");
  }
  // Reject the short tail so every residue is equally likely.
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % n);
  std::uint64_t draw = engine_();
  while (draw >= limit) {
    draw = engine_();
  }
  return draw % n;
}

} // namespace hapsplan
