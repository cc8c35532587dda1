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

#include "coremwm/pipeline.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>

#include "coremwm/errors.h"
#include "coremwm/oracle.h"
#include "coremwm/parallel.h"

namespace coremwm {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

// Exact MWM on the touched vertices of `graph` (relabelled densely), mapped
// back to the original ids. Empty optional when it does not fit the oracle.
std::optional<Matching> exact_on_compacted(const WeightedGraph& graph,
                                           std::size_t max_edges) {
  if (graph.num_edges() > max_edges) return std::nullopt;
  std::unordered_map<VertexId, VertexId> local;
  std::vector<VertexId> original;
  auto map = [&](VertexId v) {
    auto [it, inserted] =
        local.emplace(v, static_cast<VertexId>(original.size()));
    if (inserted) original.push_back(v);
    return it->second;
  };
  std::vector<WeightedEdge> edges;
  edges.reserve(graph.num_edges());
  for (const auto& e : graph.edges()) {
    edges.push_back({e.eid, map(e.u), map(e.v), e.w});
  }
  constexpr std::size_t kMaxOracleVertices = 64;
  if (original.size() > kMaxOracleVertices) return std::nullopt;
  const auto small = WeightedGraph::from_edges(original.size(), std::move(edges));
  const auto best = exact_mwm(small, OracleLimits{max_edges, kMaxOracleVertices});
  std::vector<WeightedEdge> lifted;
  for (const auto& e : best.edges()) {
    lifted.push_back({e.eid, original[e.u], original[e.v], e.w});
  }
  return Matching::from_edges(graph.num_vertices(), std::move(lifted));
}

Matching best_of(const Matching& greedy_h, std::span<const Matching> per_machine,
                 int* source) {
  const Matching* best = &greedy_h;
  int from = -1;
  for (std::size_t i = 0; i < per_machine.size(); ++i) {
    if (per_machine[i].total_weight() > best->total_weight()) {
      best = &per_machine[i];
      from = static_cast<int>(i);
    }
  }
  if (source != nullptr) *source = from;
  return *best;
}

}  // namespace

std::string_view post_mode_name(PostMode mode) {
  switch (mode) {
    case PostMode::kGreedy:
      return "greedy";
    case PostMode::kBestOf:
      return "best-of";
    case PostMode::kExact:
      return "exact";
    case PostMode::kLocalSearch:
      return "local-search";
  }
  return "unknown";
}

PostMode parse_post_mode(std::string_view name) {
  if (name == "greedy") return PostMode::kGreedy;
  if (name == "best-of" || name == "best_of") return PostMode::kBestOf;
  if (name == "exact") return PostMode::kExact;
  if (name == "local-search" || name == "local_search") {
    return PostMode::kLocalSearch;
  }
  throw ConfigError("unknown post-processing mode '" + std::string(name) + "'");
}

void PipelineConfig::validate() const {
  cluster.validate();
  if (workers == 0) throw ConfigError("workers must be at least 1");
  if (post.exact_max_union_edges == 0) {
    throw ConfigError("exact threshold must be at least 1");
  }
}

Matching greedy_coreset(const WeightedGraph& partition) {
  std::vector<WeightedEdge> edges(partition.edges().begin(),
                                  partition.edges().end());
  return greedy_matching(partition.num_vertices(), edges);
}

WeightedGraph union_coresets(const WeightedGraph& ground,
                             std::span<const Matching> matchings) {
  std::vector<WeightedEdge> edges;
  std::size_t total = 0;
  for (const auto& m : matchings) total += m.size();
  edges.reserve(total);
  for (const auto& m : matchings) {
    edges.insert(edges.end(), m.edges().begin(), m.edges().end());
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.eid < b.eid;
            });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const WeightedEdge& a, const WeightedEdge& b) {
                            return a.eid == b.eid;
                          }),
              edges.end());
  return ground.subgraph(std::move(edges));
}

Matching local_search(const WeightedGraph& graph, Matching start,
                      std::uint32_t rounds) {
  const std::size_t n = graph.num_vertices();
  const auto edges = graph.edges();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Incident edge indices per vertex, heaviest first.
  std::vector<std::vector<std::size_t>> incident(n);
  {
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edge_precedes(edges[a], edges[b]);
    });
    for (auto i : order) {
      incident[edges[i].u].push_back(i);
      incident[edges[i].v].push_back(i);
    }
  }

  std::unordered_map<EdgeId, std::size_t> by_eid;
  for (std::size_t i = 0; i < edges.size(); ++i) by_eid.emplace(edges[i].eid, i);
  std::vector<std::size_t> at(n, kNone);  // matched edge index per vertex
  for (const auto& e : start.edges()) {
    auto it = by_eid.find(e.eid);
    if (it == by_eid.end()) {
      throw InternalError("local_search: start matching edge not in graph");
    }
    at[e.u] = it->second;
    at[e.v] = it->second;
  }
  auto other = [&](std::size_t idx, VertexId v) {
    return edges[idx].u == v ? edges[idx].v : edges[idx].u;
  };
  auto is_free = [&](VertexId v) { return at[v] == kNone; };
  auto take = [&](std::size_t idx) {
    at[edges[idx].u] = idx;
    at[edges[idx].v] = idx;
  };
  auto drop = [&](std::size_t idx) {
    at[edges[idx].u] = kNone;
    at[edges[idx].v] = kNone;
  };
  // Up to two heaviest edges from `v` to free vertices other than `skip`.
  auto top_two = [&](VertexId v, VertexId skip) {
    std::array<std::size_t, 2> best{kNone, kNone};
    std::size_t found = 0;
    for (auto idx : incident[v]) {
      const VertexId x = other(idx, v);
      if (x == skip || !is_free(x)) continue;
      best[found++] = idx;
      if (found == 2) break;
    }
    return best;
  };

  for (std::uint32_t round = 0; round < rounds; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (is_free(edges[i].u) && is_free(edges[i].v)) {
        take(i);
        improved = true;
      }
    }
    for (VertexId a = 0; a < n; ++a) {
      const std::size_t m = at[a];
      if (m == kNone || edges[m].u != a) continue;
      const VertexId b = edges[m].v;
      const auto ca = top_two(a, b);
      const auto cb = top_two(b, a);
      double best_gain = 0.0;
      std::array<std::size_t, 2> best_set{kNone, kNone};
      auto offer = [&](std::size_t x, std::size_t y) {
        double gain = -edges[m].w;
        if (x != kNone) gain += edges[x].w;
        if (y != kNone) gain += edges[y].w;
        if (gain > best_gain) {
          best_gain = gain;
          best_set = {x, y};
        }
      };
      for (auto x : ca) {
        if (x == kNone) continue;
        offer(x, kNone);
        for (auto y : cb) {
          if (y == kNone) continue;
          if (other(x, a) == other(y, b)) continue;
          offer(x, y);
        }
      }
      for (auto y : cb) {
        if (y != kNone) offer(kNone, y);
      }
      if (best_set[0] == kNone && best_set[1] == kNone) continue;
      drop(m);
      for (auto idx : best_set) {
        if (idx != kNone) take(idx);
      }
      improved = true;
    }
    if (!improved) break;
  }

  std::vector<WeightedEdge> chosen;
  for (VertexId v = 0; v < n; ++v) {
    if (at[v] != kNone && edges[at[v]].u == v) chosen.push_back(edges[at[v]]);
  }
  auto result = Matching::from_edges(n, std::move(chosen));
  if (result.total_weight() < start.total_weight()) return start;
  return result;
}

Matching post_process(const WeightedGraph& union_graph,
                      std::span<const Matching> per_machine,
                      const PostConfig& post, PostMode* used,
                      int* best_of_source, std::vector<std::string>* notes) {
  if (used != nullptr) *used = post.mode;
  if (best_of_source != nullptr) *best_of_source = -1;
  std::vector<WeightedEdge> h_edges(union_graph.edges().begin(),
                                    union_graph.edges().end());
  Matching greedy_h = greedy_matching(union_graph.num_vertices(), h_edges);
  switch (post.mode) {
    case PostMode::kGreedy:
      return greedy_h;
    case PostMode::kBestOf:
      return best_of(greedy_h, per_machine, best_of_source);
    case PostMode::kExact: {
      auto exact = exact_on_compacted(union_graph, post.exact_max_union_edges);
      if (exact) return *std::move(exact);
      if (notes != nullptr) {
        notes->push_back("exact post-processing skipped: |E(H)| = " +
                         std::to_string(union_graph.num_edges()) +
                         " exceeds the threshold " +
                         std::to_string(post.exact_max_union_edges) +
                         " or the oracle vertex cap; used best-of");
      }
      if (used != nullptr) *used = PostMode::kBestOf;
      return best_of(greedy_h, per_machine, best_of_source);
    }
    case PostMode::kLocalSearch:
      return local_search(union_graph, std::move(greedy_h),
                          post.local_search_rounds);
  }
  throw InternalError("unhandled post-processing mode");
}

std::uint64_t default_memory_budget(std::uint64_t m, std::uint64_t n,
                                    const ClusterConfig& cluster) {
  const double load = static_cast<double>(m) * cluster.probability();
  return static_cast<std::uint64_t>(std::ceil(load + 5.0 * std::sqrt(load))) +
         n;
}

PipelineResult run_pipeline(const WeightedGraph& graph,
                            const PipelineConfig& config,
                            const Matching* baseline) {
  config.validate();
  PipelineResult result;
  const auto total_start = Clock::now();
  const std::size_t n = graph.num_vertices();
  const std::uint32_t k = config.cluster.k;

  // Round 1.
  auto start = Clock::now();
  const Clustering clustering = cluster(graph, config.cluster, config.isa);
  auto parts = partition_edges(graph, clustering);
  result.timings.cluster_ms = elapsed_ms(start);

  result.memory.budget_edges =
      default_memory_budget(graph.num_edges(), n, config.cluster);
  for (const auto& p : parts) {
    result.memory.machine_edges.push_back(p.size());
    result.memory.max_machine_edges =
        std::max<std::uint64_t>(result.memory.max_machine_edges, p.size());
  }
  result.memory.over_budget =
      result.memory.max_machine_edges > result.memory.budget_edges;
  if (result.memory.over_budget) {
    result.notes.push_back("machine load " +
                           std::to_string(result.memory.max_machine_edges) +
                           " edges exceeds the advisory budget " +
                           std::to_string(result.memory.budget_edges));
  }

  start = Clock::now();
  result.per_machine.resize(k);
  parallel_for(k, config.workers, [&](std::size_t i) {
    result.per_machine[i] = greedy_matching(n, parts[i]);
    std::vector<WeightedEdge>().swap(parts[i]);
  });
  result.timings.coreset_ms = elapsed_ms(start);

  // Round 2: only H and the coresets from here on.
  start = Clock::now();
  result.union_graph = union_coresets(graph, result.per_machine);
  result.final = post_process(result.union_graph, result.per_machine,
                              config.post, &result.post_used,
                              &result.best_of_source, &result.notes);
  result.timings.post_ms = elapsed_ms(start);
  result.timings.total_ms = elapsed_ms(total_start);

  if (!is_valid_matching(result.final.edges(), graph)) {
    throw InternalError("pipeline produced an invalid matching");
  }
  if (baseline != nullptr) result.quality = quality_report(result.final, *baseline);
  return result;
}

QualityReport quality_report(const Matching& final, const Matching& baseline) {
  QualityReport q;
  if (baseline.total_weight() > 0.0) {
    q.weight_pct = 100.0 * final.total_weight() / baseline.total_weight();
  } else if (final.total_weight() > 0.0) {
    q.weight_pct = std::numeric_limits<double>::infinity();
    q.weight_unbounded = true;
  } else {
    q.weight_pct = 100.0;
  }
  if (!baseline.empty()) {
    q.cardinality_pct = 100.0 * static_cast<double>(final.size()) /
                        static_cast<double>(baseline.size());
  } else if (!final.empty()) {
    q.cardinality_pct = std::numeric_limits<double>::infinity();
    q.cardinality_unbounded = true;
  } else {
    q.cardinality_pct = 100.0;
  }
  return q;
}

}  // namespace coremwm
