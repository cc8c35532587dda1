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

#include "coremwm/clustering.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <string>

#include "coremwm/errors.h"

namespace coremwm {

namespace {

constexpr std::size_t kBlock = 4096;

}  // namespace

void ClusterConfig::validate() const {
  if (k == 0) throw ConfigError("k must be at least 1");
  if (!std::isfinite(c) || c < 1.0) {
    throw ConfigError("multiplicity c must be a finite value >= 1, got " +
                      std::to_string(c));
  }
  if (c > static_cast<double>(k)) {
    throw ConfigError("multiplicity c = " + std::to_string(c) +
                      " exceeds k = " + std::to_string(k));
  }
}

double multiplicity_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ConfigError("epsilon must lie in (0, 1)");
  }
  const double inv = 1.0 / epsilon;
  return std::max(1.0, std::ceil(inv * std::log(inv)));
}

Clustering::Clustering(std::uint32_t k, std::vector<std::uint64_t> masks)
    : k_(k), words_(kernels::words_per_row(k)), masks_(std::move(masks)) {
  if (words_ != 0 && masks_.size() % words_ != 0) {
    throw InternalError("clustering mask buffer is not a whole number of rows");
  }
}

std::uint32_t Clustering::multiplicity(std::size_t edge_index) const {
  std::uint32_t count = 0;
  for (auto word : mask(edge_index)) count += std::popcount(word);
  return count;
}

std::vector<std::uint32_t> Clustering::machines(std::size_t edge_index) const {
  std::vector<std::uint32_t> out;
  const auto row = mask(edge_index);
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

Clustering cluster(const WeightedGraph& graph, const ClusterConfig& config,
                   kernels::Isa isa) {
  config.validate();
  const std::size_t words = kernels::words_per_row(config.k);
  const auto threshold = kernels::probability_threshold(config.probability());
  const auto edges = graph.edges();
  std::vector<std::uint64_t> masks(edges.size() * words);
  std::vector<std::uint64_t> keys;
  keys.reserve(kBlock);
  for (std::size_t start = 0; start < edges.size(); start += kBlock) {
    const std::size_t end = std::min(edges.size(), start + kBlock);
    keys.clear();
    for (std::size_t i = start; i < end; ++i) {
      keys.push_back(kernels::row_key(config.seed, edges[i].eid));
    }
    kernels::bernoulli_masks(
        isa, keys, config.k, threshold,
        std::span(masks).subspan(start * words, (end - start) * words));
  }
  return Clustering(config.k, std::move(masks));
}

WeightedGraph partition_subgraph(const WeightedGraph& graph,
                                 const Clustering& clustering,
                                 std::uint32_t machine) {
  if (machine >= clustering.num_machines()) {
    throw ConfigError("machine index " + std::to_string(machine) +
                      " out of range for k = " +
                      std::to_string(clustering.num_machines()));
  }
  if (clustering.num_edges() != graph.num_edges()) {
    throw ConfigError("clustering does not belong to this graph");
  }
  std::vector<WeightedEdge> part;
  for (std::size_t i = 0; i < graph.num_edges(); ++i) {
    if (clustering.assigned(i, machine)) part.push_back(graph.edge(i));
  }
  return graph.subgraph(std::move(part));
}

std::vector<std::vector<WeightedEdge>> partition_edges(
    const WeightedGraph& graph, const Clustering& clustering) {
  if (clustering.num_edges() != graph.num_edges()) {
    throw ConfigError("clustering does not belong to this graph");
  }
  const std::uint32_t k = clustering.num_machines();
  std::vector<std::vector<WeightedEdge>> parts(k);
  const auto expected = graph.num_edges() / k + 1;
  for (auto& p : parts) p.reserve(expected + expected / 8);
  for (std::size_t i = 0; i < graph.num_edges(); ++i) {
    const auto row = clustering.mask(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t bits = row[w];
      while (bits != 0) {
        parts[w * 64 + std::countr_zero(bits)].push_back(graph.edge(i));
        bits &= bits - 1;
      }
    }
  }
  return parts;
}

MultiplicityStats multiplicity_stats(const Clustering& clustering) {
  MultiplicityStats stats;
  const std::uint32_t k = clustering.num_machines();
  stats.histogram.assign(k + 1, 0);
  stats.machine_sizes.assign(k, 0);
  const std::size_t m = clustering.num_edges();
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = clustering.mask(i);
    std::uint32_t count = 0;
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t bits = row[w];
      count += std::popcount(bits);
      while (bits != 0) {
        ++stats.machine_sizes[w * 64 + std::countr_zero(bits)];
        bits &= bits - 1;
      }
    }
    ++stats.histogram[count];
    stats.total_assigned += count;
  }
  if (m > 0) {
    stats.mean = static_cast<double>(stats.total_assigned) / static_cast<double>(m);
    stats.zero_fraction =
        static_cast<double>(stats.histogram[0]) / static_cast<double>(m);
  }
  return stats;
}

void write_clustering(const WeightedGraph& graph, const Clustering& clustering,
                      std::ostream& out) {
  for (std::size_t i = 0; i < graph.num_edges(); ++i) {
    out << graph.edge(i).eid << '\t';
    const auto ms = clustering.machines(i);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (j != 0) out << ',';
      out << ms[j];
    }
    out << '\n';
  }
}

}  // namespace coremwm
