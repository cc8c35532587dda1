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

#include <gtest/gtest.h>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "coremwm/clustering.h"
#include "coremwm/errors.h"
#include "coremwm/generators.h"
#include "test_util.h"

namespace coremwm {
namespace {

const WeightedGraph& graph_1e5() {
  static const WeightedGraph g =
      generate_graph({.n = 2000, .m = 100000, .seed = 17});
  return g;
}

double chi_square_critical(double df, double alpha = 0.001) {
  return boost::math::quantile(
      boost::math::complement(boost::math::chi_squared(df), alpha));
}

TEST(Cluster, FullMultiplicityPutsEveryEdgeEverywhere) {
  std::mt19937_64 rng(1);
  const auto g = testing::random_graph(20, 0.3, rng);
  const auto cl = cluster(g, {.k = 4, .c = 4, .seed = 9});
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EXPECT_EQ(cl.machines(i), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  }
  for (std::uint32_t m = 0; m < 4; ++m) {
    const auto part = partition_subgraph(g, cl, m);
    ASSERT_EQ(part.num_edges(), g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      EXPECT_EQ(part.edge(i), g.edge(i));
    }
  }
  EXPECT_DOUBLE_EQ(multiplicity_stats(cl).mean, 4.0);
}

TEST(Cluster, SingleMachine) {
  std::mt19937_64 rng(2);
  const auto g = testing::random_graph(20, 0.3, rng);
  const auto cl = cluster(g, {.k = 1, .c = 1, .seed = 3});
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EXPECT_EQ(cl.machines(i), (std::vector<std::uint32_t>{0}));
  }
}

TEST(Cluster, ConfigErrors) {
  const auto g = WeightedGraph::from_edges(2, {});
  EXPECT_THROW(cluster(g, {.k = 0, .c = 1}), ConfigError);
  EXPECT_THROW(cluster(g, {.k = 4, .c = 8}), ConfigError);
  EXPECT_THROW(cluster(g, {.k = 4, .c = 0.5}), ConfigError);
  const auto cl = cluster(g, {.k = 4, .c = 2});
  EXPECT_THROW(partition_subgraph(g, cl, 4), ConfigError);
}

TEST(Cluster, PartitionsRecountAssignments) {
  std::mt19937_64 rng(4);
  const auto g = testing::random_graph(60, 0.2, rng);
  const auto cl = cluster(g, {.k = 8, .c = 3, .seed = 5});
  std::map<EdgeId, std::uint32_t> count;
  for (std::uint32_t m = 0; m < 8; ++m) {
    const auto part = partition_subgraph(g, cl, m);
    for (const auto& e : part.edges()) {
      ++count[e.eid];
      EXPECT_EQ(e, g.edge(e.eid));  // eids are positions in this graph
    }
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EXPECT_EQ(count[g.edge(i).eid], cl.multiplicity(i));
  }
  const auto parts = partition_edges(g, cl);
  for (std::uint32_t m = 0; m < 8; ++m) {
    const auto part = partition_subgraph(g, cl, m);
    EXPECT_EQ(parts[m].size(), part.num_edges());
  }
}

TEST(Cluster, EdgeOnSpecificMachinesOnly) {
  std::mt19937_64 rng(8);
  const auto g = testing::random_graph(40, 0.3, rng);
  const auto cl = cluster(g, {.k = 4, .c = 2, .seed = 1});
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto ms = cl.machines(i);
    for (std::uint32_t m = 0; m < 4; ++m) {
      const auto part = partition_subgraph(g, cl, m);
      bool present = false;
      for (const auto& e : part.edges()) present |= e.eid == g.edge(i).eid;
      EXPECT_EQ(present, std::find(ms.begin(), ms.end(), m) != ms.end());
    }
    if (i > 5) break;
  }
}

TEST(Cluster, OrderIndependent) {
  std::mt19937_64 rng(12);
  const auto g = testing::random_graph(80, 0.2, rng);
  std::vector<WeightedEdge> shuffled(g.edges().begin(), g.edges().end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const auto h = WeightedGraph::from_edges(80, shuffled);
  const ClusterConfig cfg{.k = 16, .c = 2.5, .seed = 77};
  const auto a = cluster(g, cfg);
  const auto b = cluster(h, cfg);
  std::map<EdgeId, std::vector<std::uint32_t>> ma, mb;
  for (std::size_t i = 0; i < g.num_edges(); ++i) ma[g.edge(i).eid] = a.machines(i);
  for (std::size_t i = 0; i < h.num_edges(); ++i) mb[h.edge(i).eid] = b.machines(i);
  EXPECT_EQ(ma, mb);
}

TEST(Cluster, ScalarAndAvx2Agree) {
  if (!kernels::isa_available(kernels::Isa::kAvx2)) GTEST_SKIP();
  const auto& g = graph_1e5();
  for (std::uint32_t k : {1u, 5u, 16u, 64u, 100u}) {
    const ClusterConfig cfg{.k = k, .c = std::min(3.0, double(k)), .seed = k};
    const auto a = cluster(g, cfg, kernels::Isa::kScalar);
    const auto b = cluster(g, cfg, kernels::Isa::kAvx2);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      ASSERT_TRUE(std::equal(a.mask(i).begin(), a.mask(i).end(), b.mask(i).begin()))
          << "k " << k << " edge " << i;
    }
  }
}

TEST(MultiplicityStats, MeanAndMachineLoads) {
  const auto& g = graph_1e5();
  const double m = static_cast<double>(g.num_edges());
  const auto st = multiplicity_stats(cluster(g, {.k = 16, .c = 2, .seed = 1}));
  EXPECT_GE(st.mean, 1.96);
  EXPECT_LE(st.mean, 2.04);
  const double load = m * 2 / 16;
  for (auto size : st.machine_sizes) {
    EXPECT_NEAR(static_cast<double>(size), load, 5 * std::sqrt(load));
  }
  EXPECT_NEAR(static_cast<double>(st.total_assigned), 2 * m, 5 * std::sqrt(2 * m));
}

TEST(MultiplicityStats, ZeroCopyFraction) {
  const auto st = multiplicity_stats(cluster(graph_1e5(), {.k = 16, .c = 1, .seed = 2}));
  EXPECT_NEAR(st.zero_fraction, std::pow(1.0 - 1.0 / 16, 16), 0.01);
  EXPECT_NEAR(st.zero_fraction, 0.356, 0.01);
}

TEST(MultiplicityStats, AllEverywhereMeanIsK) {
  std::mt19937_64 rng(1);
  const auto g = testing::random_graph(30, 0.5, rng);
  EXPECT_DOUBLE_EQ(multiplicity_stats(cluster(g, {.k = 7, .c = 7})).mean, 7.0);
}

TEST(MultiplicityStats, BinomialChiSquare) {
  const auto& g = graph_1e5();
  const std::uint32_t k = 16;
  const double c = 2;
  const auto st = multiplicity_stats(cluster(g, {.k = k, .c = c, .seed = 5}));
  const boost::math::binomial_distribution<double> binom(k, c / k);
  const double m = static_cast<double>(g.num_edges());
  // Merge tail bins so every expected count is at least 5.
  double stat = 0.0;
  int bins = 0;
  double obs_tail = 0.0;
  double exp_tail = 0.0;
  for (std::uint32_t t = 0; t <= k; ++t) {
    obs_tail += static_cast<double>(st.histogram[t]);
    exp_tail += m * boost::math::pdf(binom, t);
    if (exp_tail >= 5.0 && t < k) {
      const double rest = m * boost::math::cdf(boost::math::complement(binom, t));
      if (rest >= 5.0) {
        stat += (obs_tail - exp_tail) * (obs_tail - exp_tail) / exp_tail;
        ++bins;
        obs_tail = exp_tail = 0.0;
      }
    }
  }
  stat += (obs_tail - exp_tail) * (obs_tail - exp_tail) / exp_tail;
  ++bins;
  EXPECT_LT(stat, chi_square_critical(bins - 1)) << bins << " bins";
}

// Given c_e = t, every t-subset of machines is equally likely.
TEST(MultiplicityStats, ConditionalUniformity) {
  const auto& g = graph_1e5();
  for (std::uint32_t k : {3u, 4u, 5u}) {
    const auto cl = cluster(g, {.k = k, .c = std::min(2.0, double(k)), .seed = 31 + k});
    std::map<std::uint32_t, std::map<std::uint64_t, double>> freq;
    for (std::size_t i = 0; i < cl.num_edges(); ++i) {
      const auto t = cl.multiplicity(i);
      if (t >= 1 && t <= 3) freq[t][cl.mask(i)[0]] += 1;
    }
    for (std::uint32_t t = 1; t <= std::min(3u, k - 1); ++t) {
      const double subsets = std::tgamma(k + 1) / std::tgamma(t + 1) / std::tgamma(k - t + 1);
      ASSERT_EQ(freq[t].size(), static_cast<std::size_t>(std::lround(subsets)));
      double total = 0;
      for (const auto& [mask, n] : freq[t]) total += n;
      const double expected = total / subsets;
      double stat = 0;
      for (const auto& [mask, n] : freq[t]) {
        stat += (n - expected) * (n - expected) / expected;
      }
      EXPECT_LT(stat, chi_square_critical(subsets - 1)) << "k " << k << " t " << t;
    }
  }
}

TEST(Epsilon, MapsToMultiplicity) {
  EXPECT_EQ(multiplicity_for_epsilon(0.5), 2.0);  // 2 ln 2 = 1.386 -> 2
  EXPECT_EQ(multiplicity_for_epsilon(0.1), 24.0);  // 10 ln 10 = 23.03 -> 24
  EXPECT_EQ(multiplicity_for_epsilon(0.9), 1.0);
  EXPECT_THROW(multiplicity_for_epsilon(0.0), ConfigError);
  EXPECT_THROW(multiplicity_for_epsilon(1.5), ConfigError);
}

TEST(WriteClustering, DebugDump) {
  const auto g = testing::parse_graph("a b 1\nb c 2\n");
  std::ostringstream out;
  write_clustering(g, cluster(g, {.k = 2, .c = 2}), out);
  EXPECT_EQ(out.str(), "0\t0,1\n1\t0,1\n");
}

}  // namespace
}  // namespace coremwm
