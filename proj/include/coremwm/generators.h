// Copyright 2026 The coremwm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COREMWM_GENERATORS_H_
#define COREMWM_GENERATORS_H_

#include <cstdint>
#include <string_view>

#include "coremwm/graph.h"

namespace coremwm {

enum class Topology { kUniform, kPowerLaw };
enum class WeightDist { kUniform, kExponential };

Topology parse_topology(std::string_view name);
WeightDist parse_weight_dist(std::string_view name);

struct GeneratorConfig {
  Topology topology = Topology::kUniform;
  WeightDist weights = WeightDist::kUniform;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  // Degree exponent of the power-law (Chung-Lu) topology.
  double exponent = 2.5;
};

// Simple graph with exactly m distinct edges on n vertices, eids 0..m-1 in a
// random order, weights in (0, 1] (uniform) or Exp(1) shifted away from 0.
// Throws ConfigError when m exceeds the pair count or the power-law sampler
// cannot find m distinct pairs.
WeightedGraph generate_graph(const GeneratorConfig& config);

}  // namespace coremwm

#endif  // COREMWM_GENERATORS_H_
