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

// Experiment drivers shared by the CLI and the acceptance suite. Every
// quality figure is relative to sequential greedy on the full graph.

#ifndef COREMWM_EXPERIMENTS_H_
#define COREMWM_EXPERIMENTS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "coremwm/graph.h"
#include "coremwm/pipeline.h"

namespace coremwm {

struct BenchRow {
  std::uint64_t seed = 0;
  double sequential_ms = 0.0;
  double pipeline_ms = 0.0;
  double speedup = 0.0;  // sequential_ms / pipeline_ms
  QualityReport quality;
  PipelineTimings timings;
  std::size_t union_edges = 0;
  std::uint64_t max_machine_edges = 0;
  bool over_budget = false;
};

struct BenchSummary {
  std::vector<BenchRow> rows;
  double mean_weight_pct = 0.0;
  double mean_cardinality_pct = 0.0;
  double mean_speedup = 0.0;
  double total_sequential_ms = 0.0;
  double total_pipeline_ms = 0.0;
};

// Times Greedy(G) and run_pipeline per seed in the same process. The seed of
// `config.cluster` is replaced by each entry of `seeds`. One untimed warm-up
// pass of each runs first so both start from the same cache state.
BenchSummary run_bench(const WeightedGraph& graph, const PipelineConfig& config,
                       std::span<const std::uint64_t> seeds);

struct SweepRow {
  double c = 0.0;
  double mean_weight_pct = 0.0;
  double mean_cardinality_pct = 0.0;
};

// One row per c; throws ConfigError if any c > k before running anything.
std::vector<SweepRow> sweep_multiplicity(const WeightedGraph& graph,
                                         const PipelineConfig& base,
                                         std::span<const double> c_values,
                                         std::span<const std::uint64_t> seeds);

struct SamplingRow {
  std::uint32_t k = 0;
  double best_single_pct = 0.0;  // heaviest M_i vs Greedy(G)
  double pipeline_pct = 0.0;     // final vs Greedy(G)
  double m1_pct = 0.0;           // M_1 vs Greedy(G)
};

std::vector<SamplingRow> sampling_experiment(
    const WeightedGraph& graph, const PipelineConfig& base,
    std::span<const std::uint32_t> k_values,
    std::span<const std::uint64_t> seeds);

// seeds first, first+1, ..., first+count-1.
std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count);

}  // namespace coremwm

#endif  // COREMWM_EXPERIMENTS_H_
