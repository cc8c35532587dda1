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

#include "coremwm/greedy.h"

#include <algorithm>
#include <ostream>
#include <string>

#include "coremwm/errors.h"

namespace coremwm {

class MatchingBuilder {
 public:
  explicit MatchingBuilder(std::size_t n) : m_(n) {}

  bool free(VertexId v) const { return m_.slot_[v] == Matching::kNoSlot; }

  // Caller guarantees canonical order and free endpoints.
  void append(const WeightedEdge& e) {
    const auto slot = static_cast<std::uint32_t>(m_.edges_.size());
    m_.edges_.push_back(e);
    m_.slot_[e.u] = slot;
    m_.slot_[e.v] = slot;
    m_.total_weight_ += e.w;
  }

  Matching finish() && { return std::move(m_); }

 private:
  Matching m_;
};

Matching Matching::from_edges(std::size_t num_vertices,
                              std::vector<WeightedEdge> edges) {
  canonical_sort_in_place(edges);
  MatchingBuilder builder(num_vertices);
  for (const auto& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices || e.u == e.v) {
      throw InternalError("matching edge " + std::to_string(e.eid) +
                          " is not an edge over 0..n-1");
    }
    if (!builder.free(e.u) || !builder.free(e.v)) {
      throw InternalError("edges share a vertex; not a matching (edge " +
                          std::to_string(e.eid) + ")");
    }
    builder.append(e);
  }
  return std::move(builder).finish();
}

std::vector<EdgeId> Matching::sorted_eids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.eid);
  std::sort(ids.begin(), ids.end());
  return ids;
}

GreedyResult greedy_sorted(std::size_t num_vertices,
                           std::span<const WeightedEdge> sorted_edges) {
  MatchingBuilder builder(num_vertices);
  MatchTrace trace(num_vertices);
  for (const auto& e : sorted_edges) {
    if (builder.free(e.u) && builder.free(e.v)) {
      builder.append(e);
      const auto key = OrderKey::of(e);
      trace.record(e.u, key);
      trace.record(e.v, key);
    }
  }
  return {std::move(builder).finish(), std::move(trace)};
}

GreedyResult greedy(const WeightedGraph& graph) {
  const auto sorted = canonical_sort(graph);
  return greedy_sorted(graph.num_vertices(), sorted);
}

Matching greedy_matching(std::size_t num_vertices,
                         std::vector<WeightedEdge>& edges) {
  canonical_sort_in_place(edges);
  MatchingBuilder builder(num_vertices);
  for (const auto& e : edges) {
    if (builder.free(e.u) && builder.free(e.v)) builder.append(e);
  }
  return std::move(builder).finish();
}

bool is_valid_matching(std::span<const WeightedEdge> edges,
                       const WeightedGraph& graph) {
  std::vector<bool> used(graph.num_vertices(), false);
  for (const auto& e : edges) {
    if (e.u >= used.size() || e.v >= used.size() || e.u == e.v) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = true;
    used[e.v] = true;
  }
  return true;
}

void write_matching(const Matching& matching, const VertexDictionary& dict,
                    std::ostream& out) {
  for (const auto& e : matching.edges()) {
    out << dict.label(e.u) << '\t' << dict.label(e.v) << '\t'
        << format_weight(e.w) << '\n';
  }
}

}  // namespace coremwm
