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

// Two-round MapReduce simulation of the greedy coreset algorithm.
//
//   Round 1: cluster the edges onto k machines, run greedy on every machine.
//   Round 2: union the k matchings into H and post-process H alone.
//
// Round 2 never touches the input graph; it is handed H and the per-machine
// matchings only.

#ifndef COREMWM_PIPELINE_H_
#define COREMWM_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coremwm/clustering.h"
#include "coremwm/graph.h"
#include "coremwm/greedy.h"
#include "coremwm/kernels/bernoulli.h"

namespace coremwm {

enum class PostMode {
  kGreedy,       // Greedy(H)
  kBestOf,       // heaviest of Greedy(H), M_1, ..., M_k
  kExact,        // exact MWM of H when small enough, else kBestOf
  kLocalSearch,  // Greedy(H) plus bounded short-augmentation passes
};

std::string_view post_mode_name(PostMode mode);
PostMode parse_post_mode(std::string_view name);

struct PostConfig {
  PostMode mode = PostMode::kBestOf;
  std::size_t exact_max_union_edges = 24;
  std::uint32_t local_search_rounds = 4;
};

struct PipelineConfig {
  ClusterConfig cluster;
  PostConfig post;
  std::uint32_t workers = 1;
  kernels::Isa isa = kernels::active_isa();

  void validate() const;
};

struct PipelineTimings {
  double cluster_ms = 0.0;  // clustering + partition materialization
  double coreset_ms = 0.0;
  double post_ms = 0.0;
  double total_ms = 0.0;
};

// Advisory only: a run that exceeds the budget is reported, never aborted.
struct MemoryReport {
  std::uint64_t budget_edges = 0;
  std::uint64_t max_machine_edges = 0;
  std::vector<std::uint64_t> machine_edges;
  bool over_budget = false;
};

struct QualityReport {
  double weight_pct = 0.0;
  double cardinality_pct = 0.0;
  // Baseline was empty while the result was not.
  bool weight_unbounded = false;
  bool cardinality_unbounded = false;
};

struct PipelineResult {
  Matching final;
  std::vector<Matching> per_machine;
  WeightedGraph union_graph;
  PipelineTimings timings;
  MemoryReport memory;
  PostMode post_used = PostMode::kBestOf;
  // Source of the best_of winner: -1 for Greedy(H), else the machine index.
  int best_of_source = -1;
  std::vector<std::string> notes;
  std::optional<QualityReport> quality;
};

// M_i = Greedy(G^(i)). At most n/2 edges.
Matching greedy_coreset(const WeightedGraph& partition);

// H over the vertex set of `ground`: every coreset edge once (dedup by eid),
// ordered by eid.
WeightedGraph union_coresets(const WeightedGraph& ground,
                             std::span<const Matching> matchings);

// Round 2. `notes` receives a line when kExact falls back.
Matching post_process(const WeightedGraph& union_graph,
                      std::span<const Matching> per_machine,
                      const PostConfig& post, PostMode* used = nullptr,
                      int* best_of_source = nullptr,
                      std::vector<std::string>* notes = nullptr);

// Starting from `start`, up to `rounds` passes of gain-positive moves that
// trade at most one matched edge for at most two edges of `graph`. Weight
// never decreases.
Matching local_search(const WeightedGraph& graph, Matching start,
                      std::uint32_t rounds);

// Per-machine edge budget: expected load m*c/k plus 5 standard deviations,
// plus n for the coreset itself.
std::uint64_t default_memory_budget(std::uint64_t m, std::uint64_t n,
                                    const ClusterConfig& cluster);

// When `baseline` is given, `quality` is filled against it.
PipelineResult run_pipeline(const WeightedGraph& graph,
                            const PipelineConfig& config,
                            const Matching* baseline = nullptr);

// Percentages weight(final)/weight(baseline) and |final|/|baseline|. An empty
// baseline gives 100% against an empty result and is flagged unbounded
// otherwise.
QualityReport quality_report(const Matching& final, const Matching& baseline);

}  // namespace coremwm

#endif  // COREMWM_PIPELINE_H_
