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

#include "coremwm/oracle.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "coremwm/errors.h"

namespace coremwm {

namespace {

// Pruning slack. Bounds are sums of doubles and may round below the true
// optimum by a few ulps; a relative slack keeps equal-weight optima alive so
// the eid tie-break sees all of them.
constexpr double kRelSlack = 1e-9;

class BranchAndBound {
 public:
  explicit BranchAndBound(std::vector<WeightedEdge> sorted)
      : edges_(std::move(sorted)) {}

  std::vector<WeightedEdge> solve() {
    chosen_.clear();
    search(0, 0, 0.0);
    return best_;
  }

 private:
  static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

  bool usable(std::size_t j, std::uint64_t used) const {
    return ((bit(edges_[j].u) | bit(edges_[j].v)) & used) == 0;
  }

  // Half the sum over free vertices of their heaviest usable incident edge
  // from position i on.
  double upper_bound(std::size_t i, std::uint64_t used) const {
    std::uint64_t seen = used;
    double sum = 0.0;
    for (std::size_t j = i; j < edges_.size(); ++j) {
      if (!usable(j, used)) continue;
      const auto& e = edges_[j];
      if ((seen & bit(e.u)) == 0) {
        sum += e.w;
        seen |= bit(e.u);
      }
      if ((seen & bit(e.v)) == 0) {
        sum += e.w;
        seen |= bit(e.v);
      }
    }
    return 0.5 * sum;
  }

  void consider_leaf() {
    // chosen_ is in canonical order, so the sum is order-stable.
    double w = 0.0;
    for (const auto& e : chosen_) w += e.w;
    std::vector<EdgeId> ids;
    ids.reserve(chosen_.size());
    for (const auto& e : chosen_) ids.push_back(e.eid);
    std::sort(ids.begin(), ids.end());
    if (!have_best_ || w > best_weight_ ||
        (w == best_weight_ && ids < best_ids_)) {
      have_best_ = true;
      best_weight_ = w;
      best_ids_ = std::move(ids);
      best_ = chosen_;
    }
  }

  void search(std::size_t i, std::uint64_t used, double current) {
    while (i < edges_.size() && !usable(i, used)) ++i;
    if (i == edges_.size()) {
      consider_leaf();
      return;
    }
    if (have_best_) {
      const double bound = current + upper_bound(i, used);
      if (bound < best_weight_ - kRelSlack * std::max(1.0, best_weight_)) {
        return;
      }
    }
    const auto& e = edges_[i];
    chosen_.push_back(e);
    search(i + 1, used | bit(e.u) | bit(e.v), current + e.w);
    chosen_.pop_back();
    search(i + 1, used, current);
  }

  std::vector<WeightedEdge> edges_;
  std::vector<WeightedEdge> chosen_;
  std::vector<WeightedEdge> best_;
  std::vector<EdgeId> best_ids_;
  double best_weight_ = 0.0;
  bool have_best_ = false;
};

}  // namespace

void OracleLimits::validate() const {
  if (max_edges == 0 || max_vertices == 0) {
    throw ConfigError("oracle limits must be positive");
  }
  if (max_vertices > 64) {
    throw ConfigError("oracle supports at most 64 vertices");
  }
}

Matching exact_mwm(const WeightedGraph& graph, const OracleLimits& limits) {
  limits.validate();
  if (graph.num_vertices() > limits.max_vertices) {
    throw LimitError("exact oracle: " + std::to_string(graph.num_vertices()) +
                     " vertices exceed the cap of " +
                     std::to_string(limits.max_vertices));
  }
  if (graph.num_edges() > limits.max_edges) {
    throw LimitError("exact oracle: " + std::to_string(graph.num_edges()) +
                     " edges exceed the cap of " +
                     std::to_string(limits.max_edges));
  }
  BranchAndBound solver(canonical_sort(graph));
  return Matching::from_edges(graph.num_vertices(), solver.solve());
}

double opt_weight(const WeightedGraph& graph, const OracleLimits& limits) {
  return exact_mwm(graph, limits).total_weight();
}

}  // namespace coremwm
