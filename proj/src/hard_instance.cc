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

#include "coremwm/hard_instance.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <unordered_set>

#include "coremwm/clustering.h"
#include "coremwm/errors.h"
#include "coremwm/pipeline.h"

namespace coremwm {

void HardParams::validate() const {
  if (n < 2) throw ConfigError("hard instance needs n >= 2");
  if (!(gamma > 0.0 && gamma < 0.125)) {
    throw ConfigError("gamma must lie in (0, 1/8)");
  }
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  ClusterConfig{.k = k, .c = c}.validate();
  if (n_ab() >= n) throw ConfigError("n_AB must be smaller than n");
  if (p_ab() > 1.0) {
    throw ConfigError("p_AB = k / (c * n_AB) exceeds 1; the dense block "
                      "would be complete");
  }
}

std::size_t HardParams::n_ab() const {
  const double raw = gamma * static_cast<double>(n) / (c * alpha);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw)));
}

double HardParams::p_ab() const {
  return static_cast<double>(k) / (c * static_cast<double>(n_ab()));
}

double HardParams::expected_ab_edges() const {
  return static_cast<double>(n_ab()) * static_cast<double>(k) / c;
}

HardInstance generate_hard(const HardParams& params, std::uint64_t seed) {
  params.validate();
  const std::size_t n = params.n;
  const std::size_t nab = params.n_ab();
  std::mt19937_64 rng(seed);

  std::vector<VertexId> left(n);
  std::vector<VertexId> right(n);
  std::iota(left.begin(), left.end(), VertexId{0});
  std::iota(right.begin(), right.end(), static_cast<VertexId>(n));
  std::shuffle(left.begin(), left.end(), rng);
  std::shuffle(right.begin(), right.end(), rng);

  HardInstance inst;
  inst.params = params;
  inst.a.assign(left.begin(), left.begin() + nab);
  inst.b.assign(right.begin(), right.begin() + nab);
  std::sort(inst.a.begin(), inst.a.end());
  std::sort(inst.b.begin(), inst.b.end());

  std::vector<WeightedEdge> edges;
  std::bernoulli_distribution coin(params.p_ab());
  for (VertexId x : inst.a) {
    for (VertexId y : inst.b) {
      if (coin(rng)) edges.push_back({.u = x, .v = y, .w = 1.0});
    }
  }
  inst.ab_edges = edges.size();

  // L\A and R\B are the shuffled tails; a second shuffle makes the bijection
  // uniform.
  std::vector<VertexId> rest_right(right.begin() + nab, right.end());
  std::shuffle(rest_right.begin(), rest_right.end(), rng);
  for (std::size_t i = 0; i + nab < n; ++i) {
    edges.push_back({.u = left[nab + i], .v = rest_right[i], .w = 1.0});
  }

  std::shuffle(edges.begin(), edges.end(), rng);
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].eid = i;

  auto dict = std::make_shared<VertexDictionary>();
  for (std::size_t i = 0; i < n; ++i) dict->intern("L" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) dict->intern("R" + std::to_string(i));
  inst.graph = WeightedGraph(std::move(dict), edges);

  std::unordered_set<VertexId> in_a(inst.a.begin(), inst.a.end());
  for (const auto& e : inst.graph.edges()) {
    if (!in_a.count(e.u) && !in_a.count(e.v)) inst.planted.push_back(e);
  }
  return inst;
}

HardStructureCheck check_hard_structure(const HardInstance& inst) {
  const std::size_t n = inst.params.n;
  const std::size_t nab = inst.params.n_ab();
  HardStructureCheck chk;
  std::unordered_set<VertexId> in_a(inst.a.begin(), inst.a.end());
  std::unordered_set<VertexId> in_b(inst.b.begin(), inst.b.end());
  chk.set_sizes = inst.a.size() == nab && inst.b.size() == nab &&
                  in_a.size() == nab && in_b.size() == nab &&
                  std::all_of(inst.a.begin(), inst.a.end(),
                              [&](VertexId x) { return x < n; }) &&
                  std::all_of(inst.b.begin(), inst.b.end(),
                              [&](VertexId y) { return y >= n && y < 2 * n; });

  chk.bipartite = inst.graph.num_vertices() == 2 * n;
  chk.unit_weights = true;
  for (const auto& e : inst.graph.edges()) {
    const bool crosses = (e.u < n) != (e.v < n);
    if (!crosses) chk.bipartite = false;
    if (e.w != 1.0) chk.unit_weights = false;
  }

  chk.planted_size = inst.planted.size() == n - nab;
  chk.planted_matching = true;
  chk.planted_outside_ab = true;
  std::vector<bool> used(2 * n, false);
  std::unordered_set<EdgeId> planted_ids;
  for (const auto& e : inst.planted) {
    planted_ids.insert(e.eid);
    const VertexId l = std::min(e.u, e.v);
    const VertexId r = std::max(e.u, e.v);
    if (r >= 2 * n || l >= n || r < n || used[l] || used[r]) {
      chk.planted_matching = false;
      continue;
    }
    used[l] = used[r] = true;
    if (in_a.count(l) || in_b.count(r)) chk.planted_outside_ab = false;
  }
  chk.rest_inside_ab = true;
  std::size_t rest = 0;
  for (const auto& e : inst.graph.edges()) {
    if (planted_ids.count(e.eid)) continue;
    ++rest;
    const VertexId l = std::min(e.u, e.v);
    const VertexId r = std::max(e.u, e.v);
    if (!in_a.count(l) || !in_b.count(r)) chk.rest_inside_ab = false;
  }
  if (rest != inst.ab_edges) chk.rest_inside_ab = false;
  return chk;
}

std::size_t bipartite_max_matching(const WeightedGraph& graph,
                                   std::size_t left_size) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::vector<VertexId>> adj(left_size);
  for (const auto& e : graph.edges()) {
    const VertexId l = std::min(e.u, e.v);
    const VertexId r = std::max(e.u, e.v);
    if (l >= left_size || r < left_size) {
      throw ConfigError("bipartite_max_matching: edge does not cross the split");
    }
    adj[l].push_back(r);
  }
  std::vector<std::int64_t> match_right(n, -1);
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;

  // Kuhn's augmenting paths; recursion depth is bounded by left_size.
  auto augment = [&](auto&& self, VertexId l) -> bool {
    for (VertexId r : adj[l]) {
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (match_right[r] < 0 ||
          self(self, static_cast<VertexId>(match_right[r]))) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (VertexId root = 0; root < left_size; ++root) {
    ++stamp;
    size += augment(augment, root);
  }
  return size;
}

HardReport hard_experiment(const HardParams& params,
                           std::span<const std::uint64_t> seeds,
                           std::uint32_t workers) {
  params.validate();
  HardReport report;
  report.params = params;
  for (std::uint64_t seed : seeds) {
    const HardInstance inst = generate_hard(params, seed);
    PipelineConfig config;
    config.cluster = {.k = params.k, .c = params.c, .seed = seed};
    config.post.mode = PostMode::kBestOf;
    config.workers = workers;
    const PipelineResult run = run_pipeline(inst.graph, config);

    HardSeedRow row;
    row.seed = seed;
    row.edges = inst.graph.num_edges();
    row.ab_edges = inst.ab_edges;
    row.opt = bipartite_max_matching(inst.graph, params.n);
    row.final_size = run.final.size();
    row.union_edges = run.union_graph.num_edges();
    row.structure_ok = check_hard_structure(inst).ok();

    std::unordered_set<EdgeId> in_h;
    for (const auto& e : run.union_graph.edges()) in_h.insert(e.eid);
    std::size_t kept = 0;
    for (const auto& e : inst.planted) kept += in_h.count(e.eid);
    row.planted_in_union =
        inst.planted.empty() ? 1.0
                             : static_cast<double>(kept) / inst.planted.size();

    std::unordered_set<EdgeId> planted_ids;
    for (const auto& e : inst.planted) planted_ids.insert(e.eid);
    const Clustering clustering = cluster(inst.graph, config.cluster);
    const auto parts = partition_edges(inst.graph, clustering);
    double ab_total = 0.0;
    for (const auto& part : parts) {
      for (const auto& e : part) ab_total += planted_ids.count(e.eid) == 0;
    }
    row.mean_partition_ab = ab_total / static_cast<double>(params.k);
    report.rows.push_back(row);
  }
  if (!report.rows.empty()) {
    const double count = static_cast<double>(report.rows.size());
    for (const auto& r : report.rows) {
      report.mean_final += r.final_size / count;
      report.mean_opt += r.opt / count;
      report.mean_planted_in_union += r.planted_in_union / count;
      report.mean_partition_ab += r.mean_partition_ab / count;
      report.mean_ab_edges += r.ab_edges / count;
    }
  }
  return report;
}

void write_hard_sidecar(const HardInstance& inst, std::ostream& out) {
  const auto& dict = inst.graph.dictionary();
  auto list = [&](const char* name, const std::vector<VertexId>& ids) {
    out << name;
    for (VertexId v : ids) out << '\t' << dict.label(v);
    out << '\n';
  };
  list("A", inst.a);
  list("B", inst.b);
  for (const auto& e : inst.planted) {
    out << "planted\t" << dict.label(std::min(e.u, e.v)) << '\t'
        << dict.label(std::max(e.u, e.v)) << '\n';
  }
}

}  // namespace coremwm
