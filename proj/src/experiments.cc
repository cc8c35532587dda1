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

#include "coremwm/experiments.h"

#include <algorithm>
#include <chrono>

#include "coremwm/greedy.h"

namespace coremwm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

double pct(double num, double den) {
  if (den == 0.0) return num == 0.0 ? 100.0 : 0.0;
  return 100.0 * num / den;
}

}  // namespace

std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = first + i;
  return seeds;
}

BenchSummary run_bench(const WeightedGraph& graph, const PipelineConfig& config,
                       std::span<const std::uint64_t> seeds) {
  config.validate();
  BenchSummary out;
  if (seeds.empty()) return out;
  {
    PipelineConfig warm = config;
    warm.cluster.seed = seeds.front();
    (void)greedy(graph);
    (void)run_pipeline(graph, warm);
  }
  for (std::uint64_t seed : seeds) {
    BenchRow row;
    row.seed = seed;
    auto t0 = Clock::now();
    const GreedyResult baseline = greedy(graph);
    row.sequential_ms = ms_since(t0);

    PipelineConfig cfg = config;
    cfg.cluster.seed = seed;
    t0 = Clock::now();
    const PipelineResult run = run_pipeline(graph, cfg);
    row.pipeline_ms = ms_since(t0);

    row.speedup = row.pipeline_ms > 0 ? row.sequential_ms / row.pipeline_ms : 0;
    row.quality = quality_report(run.final, baseline.matching);
    row.timings = run.timings;
    row.union_edges = run.union_graph.num_edges();
    row.max_machine_edges = run.memory.max_machine_edges;
    row.over_budget = run.memory.over_budget;
    out.rows.push_back(row);
  }
  const double count = static_cast<double>(out.rows.size());
  for (const auto& r : out.rows) {
    out.mean_weight_pct += r.quality.weight_pct / count;
    out.mean_cardinality_pct += r.quality.cardinality_pct / count;
    out.mean_speedup += r.speedup / count;
    out.total_sequential_ms += r.sequential_ms;
    out.total_pipeline_ms += r.pipeline_ms;
  }
  return out;
}

std::vector<SweepRow> sweep_multiplicity(const WeightedGraph& graph,
                                         const PipelineConfig& base,
                                         std::span<const double> c_values,
                                         std::span<const std::uint64_t> seeds) {
  for (double c : c_values) {
    PipelineConfig cfg = base;
    cfg.cluster.c = c;
    cfg.validate();
  }
  const Matching baseline = greedy(graph).matching;
  std::vector<SweepRow> rows;
  for (double c : c_values) {
    SweepRow row;
    row.c = c;
    for (std::uint64_t seed : seeds) {
      PipelineConfig cfg = base;
      cfg.cluster.c = c;
      cfg.cluster.seed = seed;
      const auto q = quality_report(run_pipeline(graph, cfg).final, baseline);
      row.mean_weight_pct += q.weight_pct / static_cast<double>(seeds.size());
      row.mean_cardinality_pct +=
          q.cardinality_pct / static_cast<double>(seeds.size());
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<SamplingRow> sampling_experiment(
    const WeightedGraph& graph, const PipelineConfig& base,
    std::span<const std::uint32_t> k_values,
    std::span<const std::uint64_t> seeds) {
  for (std::uint32_t k : k_values) {
    PipelineConfig cfg = base;
    cfg.cluster.k = k;
    cfg.validate();
  }
  const double greedy_w = greedy(graph).matching.total_weight();
  std::vector<SamplingRow> rows;
  for (std::uint32_t k : k_values) {
    SamplingRow row;
    row.k = k;
    const double count = static_cast<double>(seeds.size());
    for (std::uint64_t seed : seeds) {
      PipelineConfig cfg = base;
      cfg.cluster.k = k;
      cfg.cluster.seed = seed;
      const PipelineResult run = run_pipeline(graph, cfg);
      double best = 0.0;
      for (const auto& m : run.per_machine) best = std::max(best, m.total_weight());
      row.best_single_pct += pct(best, greedy_w) / count;
      row.pipeline_pct += pct(run.final.total_weight(), greedy_w) / count;
      row.m1_pct += pct(run.per_machine.front().total_weight(), greedy_w) / count;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace coremwm
