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

// Helpers and independent reference implementations used only by tests.

#ifndef COREMWM_TESTS_TEST_UTIL_H_
#define COREMWM_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coremwm/graph.h"

namespace coremwm::testing {

// G(n, p) with weights uniform in (0, 1]; eids in generation order.
inline WeightedGraph random_graph(std::size_t n, double p, std::mt19937_64& rng,
                                  bool integer_weights = false) {
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> small(1, 5);
  std::vector<WeightedEdge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!coin(rng)) continue;
      const double w = integer_weights ? small(rng) : 1.0 - unit(rng);
      edges.push_back({.eid = edges.size(), .u = a, .v = b, .w = w});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].eid = i;
  return WeightedGraph::from_edges(n, std::move(edges));
}

// Random graph with at most `max_edges` edges.
inline WeightedGraph random_small_graph(std::size_t n, std::size_t max_edges,
                                        std::mt19937_64& rng,
                                        bool integer_weights = false) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_int_distribution<std::size_t> count(0, std::min(max_edges, pairs.size()));
  pairs.resize(count(rng));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> small(1, 5);
  std::vector<WeightedEdge> edges;
  for (const auto& [a, b] : pairs) {
    const double w = integer_weights ? small(rng) : 1.0 - unit(rng);
    edges.push_back({.eid = edges.size(), .u = a, .v = b, .w = w});
  }
  return WeightedGraph::from_edges(n, std::move(edges));
}

// Brute force over all 2^m edge subsets; independent of the oracle module.
inline double enumerate_opt(const WeightedGraph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t used = 0;
    double w = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      const std::uint64_t bits =
          (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
      if (used & bits) ok = false;
      used |= bits;
      w += edges[i].w;
    }
    if (ok) best = std::max(best, w);
  }
  return best;
}

inline WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

}  // namespace coremwm::testing

#endif  // COREMWM_TESTS_TEST_UTIL_H_
