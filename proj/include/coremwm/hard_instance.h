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

// Bipartite lower-bound family: a small dense random block A x B plus a
// hidden perfect matching between the complements.
//
// Left side is vertices 0..n-1, right side n..2n-1. With
//   n_AB = ceil(gamma * n / (c * alpha)),  p_AB = k / (c * n_AB),
// every pair of A x B is an edge with probability p_AB, and L\A is matched
// to R\B by a uniform bijection. All weights are 1.
//
// GreedyCoreset keeps Theta(n) edges per machine, so on this family it is
// expected to do well; the experiment is descriptive only. The lower bound
// concerns coresets of size o(n).

#ifndef COREMWM_HARD_INSTANCE_H_
#define COREMWM_HARD_INSTANCE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "coremwm/graph.h"

namespace coremwm {

struct HardParams {
  std::size_t n = 0;  // vertices per side
  std::uint32_t k = 1;
  double c = 1.0;
  double alpha = 1.0;
  double gamma = 0.1;

  // Throws ConfigError: gamma outside (0, 1/8), alpha <= 0, n_AB >= n,
  // p_AB > 1, or an invalid (k, c).
  void validate() const;
  std::size_t n_ab() const;
  double p_ab() const;
  // n_AB^2 * p_AB = n_AB * k / c.
  double expected_ab_edges() const;
};

struct HardInstance {
  HardParams params;
  WeightedGraph graph;
  std::vector<VertexId> a;  // sorted, left side
  std::vector<VertexId> b;  // sorted, right side
  std::vector<WeightedEdge> planted;
  std::size_t ab_edges = 0;
};

HardInstance generate_hard(const HardParams& params, std::uint64_t seed);

struct HardStructureCheck {
  bool bipartite = false;
  bool planted_size = false;      // |planted| == n - n_AB
  bool planted_matching = false;  // vertex-disjoint, L\A -> R\B
  bool planted_outside_ab = false;
  bool rest_inside_ab = false;
  bool unit_weights = false;
  bool set_sizes = false;  // |A| == |B| == n_AB

  bool ok() const {
    return bipartite && planted_size && planted_matching &&
           planted_outside_ab && rest_inside_ab && unit_weights && set_sizes;
  }
};

HardStructureCheck check_hard_structure(const HardInstance& instance);

// Maximum cardinality matching of a bipartite graph given the side split
// (left side = ids < left_size), via augmenting paths.
std::size_t bipartite_max_matching(const WeightedGraph& graph,
                                   std::size_t left_size);

struct HardSeedRow {
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  std::size_t ab_edges = 0;
  std::size_t opt = 0;
  std::size_t final_size = 0;
  std::size_t union_edges = 0;
  double planted_in_union = 0.0;      // fraction of planted edges in H
  double mean_partition_ab = 0.0;     // mean A x B edges per machine
  bool structure_ok = false;
};

struct HardReport {
  HardParams params;
  std::vector<HardSeedRow> rows;
  double mean_final = 0.0;
  double mean_opt = 0.0;
  double mean_planted_in_union = 0.0;
  double mean_partition_ab = 0.0;
  double mean_ab_edges = 0.0;
};

// Runs the best-of pipeline on generate_hard(params, seed) per seed.
HardReport hard_experiment(const HardParams& params,
                           std::span<const std::uint64_t> seeds,
                           std::uint32_t workers = 1);

// Sidecar: "A\t<ids>", "B\t<ids>", then "planted\tu\tv" lines (vertex labels).
void write_hard_sidecar(const HardInstance& instance, std::ostream& out);

}  // namespace coremwm

#endif  // COREMWM_HARD_INSTANCE_H_
