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

#ifndef COREMWM_CLUSTERING_H_
#define COREMWM_CLUSTERING_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "coremwm/graph.h"
#include "coremwm/kernels/bernoulli.h"

namespace coremwm {

// Random k-clustering with expected multiplicity c: every edge lands on each
// machine independently with probability c/k, so its copy count is
// Binomial(k, c/k) and, given the count, the machine set is a uniform subset.
struct ClusterConfig {
  std::uint32_t k = 1;
  double c = 1.0;
  std::uint64_t seed = 0;

  // Throws ConfigError unless k >= 1 and 1 <= c <= k.
  void validate() const;
  double probability() const { return c / static_cast<double>(k); }
};

// c = max(1, ceil((1/eps) * ln(1/eps))). Throws ConfigError unless
// 0 < eps < 1.
double multiplicity_for_epsilon(double epsilon);

class Clustering {
 public:
  Clustering() = default;
  Clustering(std::uint32_t k, std::vector<std::uint64_t> masks);

  std::uint32_t num_machines() const { return k_; }
  std::size_t num_edges() const { return words_ == 0 ? 0 : masks_.size() / words_; }

  // Indexed by the edge's position in the clustered graph.
  bool assigned(std::size_t edge_index, std::uint32_t machine) const {
    return (masks_[edge_index * words_ + machine / 64] >> (machine % 64)) & 1U;
  }
  std::uint32_t multiplicity(std::size_t edge_index) const;
  // Ascending machine indices.
  std::vector<std::uint32_t> machines(std::size_t edge_index) const;
  std::span<const std::uint64_t> mask(std::size_t edge_index) const {
    return {masks_.data() + edge_index * words_, words_};
  }

 private:
  std::uint32_t k_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> masks_;
};

// Each edge's machine set depends only on (seed, eid): reordering the input
// edges never changes any assignment.
Clustering cluster(const WeightedGraph& graph, const ClusterConfig& config,
                   kernels::Isa isa = kernels::active_isa());

// G^(i): the edges assigned to machine i, over the full vertex set.
WeightedGraph partition_subgraph(const WeightedGraph& graph,
                                 const Clustering& clustering,
                                 std::uint32_t machine);

// All k partitions in one pass; edges keep the graph's order.
std::vector<std::vector<WeightedEdge>> partition_edges(
    const WeightedGraph& graph, const Clustering& clustering);

struct MultiplicityStats {
  double mean = 0.0;
  // histogram[t] = number of edges with exactly t copies, t = 0..k.
  std::vector<std::uint64_t> histogram;
  std::vector<std::uint64_t> machine_sizes;
  std::uint64_t total_assigned = 0;
  double zero_fraction = 0.0;
};

MultiplicityStats multiplicity_stats(const Clustering& clustering);

// Debug dump: `eid<TAB>m,m,...` per edge (empty list for dropped edges).
void write_clustering(const WeightedGraph& graph, const Clustering& clustering,
                      std::ostream& out);

}  // namespace coremwm

#endif  // COREMWM_CLUSTERING_H_
