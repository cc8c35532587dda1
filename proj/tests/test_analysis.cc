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

#include <algorithm>
#include <random>
#include <set>

#include "coremwm/analysis.h"
#include "coremwm/errors.h"
#include "coremwm/oracle.h"
#include "coremwm/pipeline.h"
#include "test_util.h"

namespace coremwm {
namespace {

using testing::parse_graph;

// a-b (5), b-c (6), c-a (1); M* = {ab} on purpose (valid, not optimal).
struct Triangle {
  WeightedGraph g = parse_graph("a b 5\nb c 6\nc a 1\n");
  WeightedEdge ab = g.edge(0);
  WeightedEdge bc = g.edge(1);
};

TEST(Classify, EmptyPartitionMakesEverythingFree) {
  std::mt19937_64 rng(1);
  const auto g = testing::random_small_graph(10, 20, rng);
  const auto opt = exact_mwm(g);
  const auto fb = classify_free_blocked(g.subgraph({}), opt.edges());
  EXPECT_EQ(fb.free.size(), opt.size());
  EXPECT_TRUE(fb.blocked.empty());
}

TEST(Classify, GreedysFirstEdgeIsFree) {
  std::mt19937_64 rng(2);
  const auto g = testing::random_small_graph(10, 20, rng);
  if (g.num_edges() == 0) GTEST_SKIP();
  const auto first = canonical_sort(g).front();
  const std::vector<WeightedEdge> opt = {first};
  const auto fb = classify_free_blocked(g, opt);
  ASSERT_EQ(fb.free.size(), 1u);
  EXPECT_EQ(fb.free[0], first);
}

TEST(Classify, RejectsNonMatching) {
  Triangle t;
  const std::vector<WeightedEdge> bad = {t.ab, t.bc};
  EXPECT_THROW(classify_free_blocked(t.g, bad), ConfigError);
}

TEST(Classify, CertificatesAreIncidentAndHeavier) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_small_graph(12, 30, rng, trial % 2 == 0);
    const auto opt = exact_mwm(g, {.max_edges = 30});
    const auto cl = cluster(g, {.k = 4, .c = 2, .seed = static_cast<std::uint64_t>(trial)});
    const auto run = greedy(partition_subgraph(g, cl, 0));
    const auto fb = classify_free_blocked(run, opt.edges());
    EXPECT_EQ(fb.free.size() + fb.blocked.size(), opt.size());
    for (const auto& e : fb.blocked) {
      ASSERT_TRUE(fb.certificate.count(e.eid));
      const auto& cert = fb.certificate.at(e.eid);
      EXPECT_TRUE(cert.u == e.u || cert.u == e.v || cert.v == e.u || cert.v == e.v);
      EXPECT_GE(cert.w, e.w);
      EXPECT_TRUE(run.matching.contains(cert));
    }
  }
}

TEST(PartitionTypes, NoBlockedEdges) {
  std::mt19937_64 rng(4);
  const auto g = testing::random_small_graph(10, 20, rng);
  const auto opt = exact_mwm(g);
  const auto sets = partition_types(opt.edges(), {}, Matching(10), {});
  EXPECT_EQ(sets.f10.size(), opt.size());
  EXPECT_TRUE(sets.b11.empty() && sets.b12.empty() && sets.b13.empty());
  EXPECT_TRUE(sets.type1.empty() && sets.type2.empty() && sets.type3.empty());
  const auto charge = charging_matching(sets, 10);
  EXPECT_EQ(charge.matching.size(), opt.size());  // M = F10
  EXPECT_TRUE(charge.meets_half_bound && charge.meets_strong_bound);
}

TEST(PartitionTypes, TriangleTypeOne) {
  Triangle t;
  const std::vector<WeightedEdge> opt = {t.ab};
  const auto run = greedy(t.g);
  ASSERT_EQ(run.matching.total_weight(), 6.0);
  const auto fb = classify_free_blocked(run, opt);
  ASSERT_EQ(fb.blocked.size(), 1u);
  EXPECT_EQ(fb.certificate.at(t.ab.eid), t.bc);

  const auto sets = partition_types({}, fb.blocked, run.matching, fb.certificate);
  ASSERT_EQ(sets.type1.size(), 1u);
  EXPECT_EQ(sets.type1[0].e, t.ab);
  EXPECT_FALSE(sets.type1[0].f.has_value());
  EXPECT_EQ(sets.type1[0].cert_e, t.bc);
  EXPECT_TRUE(check_type_inequalities(sets).ok);

  const auto charge = charging_matching(sets, 3);
  ASSERT_EQ(charge.matching.size(), 1u);
  EXPECT_EQ(charge.matching.edges()[0], t.bc);
  EXPECT_EQ(charge.matching.total_weight(), 6.0);
  EXPECT_EQ(charge.half_bound, 2.5);
  EXPECT_TRUE(charge.meets_half_bound);
  EXPECT_TRUE(m1_lower_bound_check(sets, run.matching));
}

TEST(PartitionTypes, MissingCertificateIsInternalError) {
  Triangle t;
  const std::vector<WeightedEdge> blocked = {t.ab};
  EXPECT_THROW(partition_types({}, blocked, Matching(3), {}), InternalError);
}

TEST(TypeInequalities, HandValues) {
  TypeSets sets;
  WeightedEdge e{.eid = 0, .u = 0, .v = 1, .w = 4};
  WeightedEdge f{.eid = 1, .u = 2, .v = 3, .w = 2};
  WeightedEdge c{.eid = 2, .u = 1, .v = 2, .w = 4};
  sets.type1.push_back({e, f, c});  // 4 >= 3
  Type2Set t2{.e = {.eid = 3, .u = 4, .v = 5, .w = 3},
              .f = {.eid = 4, .u = 6, .v = 7, .w = 5},
              .cert_e = {.eid = 5, .u = 5, .v = 6, .w = 4}};
  sets.type2.push_back(t2);  // 5 >= 4 >= 3
  EXPECT_TRUE(check_type_inequalities(sets).ok);

  sets.type2[0].f.w = 3.5;  // now w(f) < w(e')
  const auto bad = check_type_inequalities(sets);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.type2_violations, 1u);
}

TEST(M1Bound, EmptySetsAlwaysHold) {
  EXPECT_TRUE(m1_lower_bound_check(TypeSets{}, Matching(4)));
}

// Every input edge lands in exactly one output set.
TEST(PartitionTypes, Conservation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 6 + rng() % 9;
    const auto g = testing::random_small_graph(n, 40, rng, trial % 2 == 1);
    const auto opt = exact_mwm(g, {.max_edges = 40});
    const auto cl = cluster(g, {.k = 8, .c = 2, .seed = static_cast<std::uint64_t>(trial)});
    PipelineConfig cfg;
    cfg.cluster = {.k = 8, .c = 2, .seed = static_cast<std::uint64_t>(trial)};
    const auto run = run_pipeline(g, cfg);
    const auto m1 = greedy(partition_subgraph(g, cl, 0));
    const auto fb = classify_free_blocked(m1, opt.edges());
    std::set<EdgeId> in_h;
    for (const auto& e : run.union_graph.edges()) in_h.insert(e.eid);
    std::vector<WeightedEdge> avail;
    for (const auto& e : fb.free) if (in_h.count(e.eid)) avail.push_back(e);
    const auto sets = partition_types(avail, fb.blocked, m1.matching, fb.certificate);

    std::multiset<EdgeId> free_out, blocked_out, cert_out;
    for (const auto* v : {&sets.f10, &sets.f12, &sets.f13})
      for (const auto& e : *v) free_out.insert(e.eid);
    for (const auto* v : {&sets.b11, &sets.b12, &sets.b13})
      for (const auto& e : *v) blocked_out.insert(e.eid);
    for (const auto* v : {&sets.m11, &sets.m12, &sets.m13})
      for (const auto& e : *v) cert_out.insert(e.eid);
    std::multiset<EdgeId> free_in, blocked_in;
    for (const auto& e : avail) free_in.insert(e.eid);
    for (const auto& e : fb.blocked) blocked_in.insert(e.eid);
    EXPECT_EQ(free_out, free_in);
    EXPECT_EQ(blocked_out, blocked_in);
    EXPECT_EQ(std::set<EdgeId>(cert_out.begin(), cert_out.end()).size(), cert_out.size());
    for (EdgeId id : cert_out) {
      bool in_m1 = false;
      for (const auto& e : m1.matching.edges()) in_m1 |= e.eid == id;
      EXPECT_TRUE(in_m1);
    }
  }
}

TEST(AnalyzeRun, AllChecksOnRandomRuns) {
  std::mt19937_64 rng(6);
  int runs = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 4 + rng() % 11;  // n <= 14
    const auto g = testing::random_small_graph(n, 40, rng, trial % 3 == 0);
    AnalysisOptions opts;
    opts.cluster = {.k = 8, .c = trial % 2 ? 2.0 : 4.0, .seed = rng()};
    const auto row = analyze_run(g, opts);
    EXPECT_TRUE(row.types_ok) << trial;
    EXPECT_TRUE(row.m1_bound_ok) << trial;
    EXPECT_TRUE(row.balance_ok) << trial;
    EXPECT_TRUE(row.charging_valid) << trial;
    EXPECT_TRUE(row.charging_half_ok) << trial;
    EXPECT_TRUE(row.charging_strong_ok) << trial;
    EXPECT_TRUE(row.charging_below_opt_h) << trial;
    ++runs;
  }
  EXPECT_EQ(runs, 500);
}

// Statistical: machine-1 free edges mostly survive into H.
TEST(AnalyzeRun, FreeEdgeAvailability) {
  std::mt19937_64 rng(7);
  for (int graph_id = 0; graph_id < 3; ++graph_id) {
    const auto g = testing::random_small_graph(12, 30, rng);
    double avail = 0, all = 0, opt = 0;
    const int seeds = 500;
    for (int s = 0; s < seeds; ++s) {
      AnalysisOptions opts;
      opts.cluster = {.k = 16, .c = 8, .seed = static_cast<std::uint64_t>(s)};
      const auto row = analyze_run(g, opts);
      avail += (row.f10 + row.f12 + row.f13) / seeds;
      all += row.free_all / seeds;
      opt = row.opt_g;
    }
    EXPECT_GE(avail, all - 0.25 * opt) << "graph " << graph_id;
  }
}

TEST(AnalyzeRun, RefusesLargeGraphs) {
  std::mt19937_64 rng(8);
  const auto g = testing::random_graph(40, 0.3, rng);
  EXPECT_THROW(analyze_run(g, AnalysisOptions{.cluster = {.k = 4, .c = 2}}), LimitError);
}

}  // namespace
}  // namespace coremwm
