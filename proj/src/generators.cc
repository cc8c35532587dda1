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

#include "coremwm/generators.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "coremwm/errors.h"

namespace coremwm {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Draws batches of candidate pairs until m distinct ones are collected.
template <typename DrawVertex>
std::vector<std::uint64_t> distinct_pairs(std::size_t m, std::mt19937_64& rng,
                                          DrawVertex&& draw) {
  std::vector<std::uint64_t> keys;
  keys.reserve(m + m / 8 + 16);
  for (int attempt = 0; keys.size() < m; ++attempt) {
    if (attempt > 64) {
      throw ConfigError("generator could not find " + std::to_string(m) +
                        " distinct pairs");
    }
    const std::size_t want = (m - keys.size()) + (m - keys.size()) / 8 + 16;
    for (std::size_t i = 0; i < want; ++i) {
      const VertexId a = draw(rng);
      const VertexId b = draw(rng);
      if (a != b) keys.push_back(pair_key(a, b));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }
  // Keep a uniformly random m-subset, not the m smallest keys.
  std::shuffle(keys.begin(), keys.end(), rng);
  keys.resize(m);
  return keys;
}

}  // namespace

Topology parse_topology(std::string_view name) {
  if (name == "uniform") return Topology::kUniform;
  if (name == "powerlaw") return Topology::kPowerLaw;
  throw ConfigError("unknown generator '" + std::string(name) +
                    "' (expected uniform or powerlaw)");
}

WeightDist parse_weight_dist(std::string_view name) {
  if (name == "uniform") return WeightDist::kUniform;
  if (name == "exp") return WeightDist::kExponential;
  throw ConfigError("unknown weight distribution '" + std::string(name) +
                    "' (expected uniform or exp)");
}

WeightedGraph generate_graph(const GeneratorConfig& config) {
  const std::size_t n = config.n;
  if (n < 2 && config.m > 0) throw ConfigError("generator needs n >= 2");
  if (n > (std::size_t{1} << 32)) throw ConfigError("generator n too large");
  const long double pairs = static_cast<long double>(n) * (n - 1) / 2;
  if (static_cast<long double>(config.m) > pairs) {
    throw ConfigError("m exceeds the number of vertex pairs");
  }

  std::mt19937_64 rng(config.seed);
  std::vector<std::uint64_t> keys;
  if (config.topology == Topology::kUniform) {
    if (static_cast<long double>(config.m) > 0.5L * pairs) {
      // Dense request: enumerate all pairs and take a random subset.
      keys.reserve(static_cast<std::size_t>(pairs));
      for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) keys.push_back(pair_key(a, b));
      }
      std::shuffle(keys.begin(), keys.end(), rng);
      keys.resize(config.m);
    } else {
      std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
      keys = distinct_pairs(config.m, rng, pick);
    }
  } else {
    if (config.exponent <= 2.0) throw ConfigError("power-law exponent must be > 2");
    std::vector<double> expected_degree(n);
    const double power = -1.0 / (config.exponent - 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      expected_degree[i] = std::pow(static_cast<double>(i + 1), power);
    }
    std::discrete_distribution<VertexId> pick(expected_degree.begin(),
                                              expected_degree.end());
    keys = distinct_pairs(config.m, rng, pick);
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  std::vector<WeightedEdge> edges;
  edges.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    double w = 0.0;
    if (config.weights == WeightDist::kUniform) {
      w = 1.0 - unit(rng);  // (0, 1]
    } else {
      w = expo(rng) + 1e-12;
    }
    edges.push_back({.eid = i,
                     .u = static_cast<VertexId>(keys[i] >> 32),
                     .v = static_cast<VertexId>(keys[i] & 0xffffffffu),
                     .w = w});
  }
  return WeightedGraph::from_edges(n, std::move(edges));
}

}  // namespace coremwm
