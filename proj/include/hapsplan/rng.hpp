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

#ifndef HAPSPLAN_RNG_HPP
#define HAPSPLAN_RNG_HPP

#include <cstdint>
#include <random>

namespace hapsplan {

// Stateless mixing step of splitmix64.
std::uint64_t mix64(std::uint64_t x);

// Independent child seed for a named sub-stream of `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Seeded generator with portable draws: the same seed yields the same
// sequence on every standard library, unlike std::uniform_*_distribution.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform integer on [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

private:
  std::mt19937_64 engine_;
};

} // namespace hapsplan

#endif
