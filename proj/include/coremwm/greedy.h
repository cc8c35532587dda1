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

#ifndef COREMWM_GREEDY_H_
#define COREMWM_GREEDY_H_

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "coremwm/graph.h"

namespace coremwm {

// Vertex-disjoint edge set over n vertices. Edges are kept in canonical
// order and the total is summed in that order, so two matchings with the same
// edges always report the same weight.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t num_vertices)
      : slot_(num_vertices, kNoSlot) {}

  // Throws InternalError if `edges` share a vertex or leave 0..n-1.
  static Matching from_edges(std::size_t num_vertices,
                             std::vector<WeightedEdge> edges);

  std::size_t num_vertices() const { return slot_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  double total_weight() const { return total_weight_; }
  std::span<const WeightedEdge> edges() const { return edges_; }

  bool is_matched(VertexId v) const { return slot_[v] != kNoSlot; }
  // Edge covering v; undefined if v is unmatched.
  const WeightedEdge& edge_at(VertexId v) const { return edges_[slot_[v]]; }
  bool contains(const WeightedEdge& e) const {
    return is_matched(e.u) && edge_at(e.u).eid == e.eid;
  }

  std::vector<EdgeId> sorted_eids() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.edges_ == b.edges_ && a.slot_.size() == b.slot_.size();
  }

 private:
  friend class MatchingBuilder;
  static constexpr std::uint32_t kNoSlot =
      std::numeric_limits<std::uint32_t>::max();

  std::vector<WeightedEdge> edges_;
  std::vector<std::uint32_t> slot_;
  double total_weight_ = 0.0;
};

// When each vertex got matched, as the OrderKey of the edge that matched it.
// Keys are global, so a trace from one partition can be queried with the
// position of any edge of the full graph.
class MatchTrace {
 public:
  MatchTrace() = default;
  explicit MatchTrace(std::size_t num_vertices)
      : key_(num_vertices), matched_(num_vertices, false) {}

  void record(VertexId v, OrderKey key) {
    key_[v] = key;
    matched_[v] = true;
  }
  bool ever_matched(VertexId v) const { return matched_[v]; }
  const OrderKey& match_key(VertexId v) const { return key_[v]; }
  // True iff greedy restricted to edges strictly before `position` already
  // matched v.
  bool matched_before(VertexId v, const OrderKey& position) const {
    return matched_[v] && precedes(key_[v], position);
  }
  std::size_t num_vertices() const { return key_.size(); }

 private:
  std::vector<OrderKey> key_;
  std::vector<bool> matched_;
};

struct GreedyResult {
  Matching matching;
  MatchTrace trace;
};

// Greedy(G, pi) with pi the canonical order: take an edge iff both endpoints
// are still unmatched.
GreedyResult greedy(const WeightedGraph& graph);
// Same over edges already in canonical order.
GreedyResult greedy_sorted(std::size_t num_vertices,
                           std::span<const WeightedEdge> sorted_edges);
// Matching only; sorts `edges` in place.
Matching greedy_matching(std::size_t num_vertices,
                         std::vector<WeightedEdge>& edges);

// True iff the edges are pairwise vertex-disjoint and inside the graph.
bool is_valid_matching(std::span<const WeightedEdge> edges,
                       const WeightedGraph& graph);

// `u_label<TAB>v_label<TAB>w` lines.
void write_matching(const Matching& matching, const VertexDictionary& dict,
                    std::ostream& out);

}  // namespace coremwm

#endif  // COREMWM_GREEDY_H_
