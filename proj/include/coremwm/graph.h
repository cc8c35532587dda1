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

#ifndef COREMWM_GRAPH_H_
#define COREMWM_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coremwm {

using VertexId = std::uint32_t;
using EdgeId = std::uint64_t;

struct WeightedEdge {
  EdgeId eid = 0;
  VertexId u = 0;
  VertexId v = 0;
  double w = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Canonical edge order: weight descending, then eid ascending. Every machine
// sees the same order for the same edge, so greedy ties break identically.
struct OrderKey {
  double w = 0.0;
  EdgeId eid = 0;

  static OrderKey of(const WeightedEdge& e) { return {e.w, e.eid}; }

  // True iff `a` is processed strictly before `b`.
  friend bool precedes(const OrderKey& a, const OrderKey& b) {
    if (a.w != b.w) return a.w > b.w;
    return a.eid < b.eid;
  }
  friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

inline bool edge_precedes(const WeightedEdge& a, const WeightedEdge& b) {
  return precedes(OrderKey::of(a), OrderKey::of(b));
}

// Bijection between external labels and dense ids 0..n-1.
class VertexDictionary {
 public:
  VertexId intern(std::string_view label);
  // Appends `count` vertices labelled by their decimal id.
  void add_numeric(std::size_t count);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(VertexId id) const { return labels_.at(id); }
  // Throws std::out_of_range for unknown labels.
  VertexId id(std::string_view label) const;
  bool contains(std::string_view label) const;

  // `label<TAB>id` lines in id order.
  void write(std::ostream& out) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

// Immutable after construction. Partitions share the dictionary of the graph
// they were cut from.
class WeightedGraph {
 public:
  WeightedGraph() : dict_(std::make_shared<VertexDictionary>()) {}

  // Validates every edge: endpoints < n, no self-loops, finite w > 0, unique
  // eids and unique unordered pairs. Throws std::invalid_argument.
  WeightedGraph(std::shared_ptr<const VertexDictionary> dict,
                std::vector<WeightedEdge> edges);

  // Same as above with numeric labels 0..n-1.
  static WeightedGraph from_edges(std::size_t n,
                                  std::vector<WeightedEdge> edges);

  // Subgraph over the same vertex set. Skips the uniqueness checks; the
  // caller guarantees `edges` is a subset of a valid graph.
  WeightedGraph subgraph(std::vector<WeightedEdge> edges) const;

  std::size_t num_vertices() const { return dict_->size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const WeightedEdge> edges() const { return edges_; }
  const WeightedEdge& edge(std::size_t i) const { return edges_[i]; }
  const VertexDictionary& dictionary() const { return *dict_; }
  const std::shared_ptr<const VertexDictionary>& shared_dictionary() const {
    return dict_;
  }
  double total_weight() const;

 private:
  struct Unchecked {};
  WeightedGraph(Unchecked, std::shared_ptr<const VertexDictionary> dict,
                std::vector<WeightedEdge> edges)
      : dict_(std::move(dict)), edges_(std::move(edges)) {}

  std::shared_ptr<const VertexDictionary> dict_;
  std::vector<WeightedEdge> edges_;
};

enum class DedupPolicy { kError, kKeepMax, kSum };

struct LoadOptions {
  DedupPolicy dedup = DedupPolicy::kError;
  bool drop_nonpositive = false;
};

// Reads `u <sep> v <sep> w` lines; `#` starts a comment line, sep is any run
// of tabs/spaces. Edge ids follow file order of first appearance. Throws
// ParseError carrying the 1-based line number.
WeightedGraph load_edge_list(std::istream& in, const LoadOptions& options = {});
WeightedGraph load_edge_list_file(const std::string& path,
                                  const LoadOptions& options = {});

// Edges sorted by OrderKey.
std::vector<WeightedEdge> canonical_sort(const WeightedGraph& graph);
void canonical_sort_in_place(std::vector<WeightedEdge>& edges);

// `u v w` lines with the graph's labels, tab separated.
void write_edge_list(const WeightedGraph& graph, std::ostream& out);

DedupPolicy parse_dedup_policy(std::string_view name);

// Shortest text that parses back to exactly `w`.
std::string format_weight(double w);

}  // namespace coremwm

#endif  // COREMWM_GRAPH_H_
