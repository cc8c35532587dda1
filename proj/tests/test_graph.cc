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
#include <map>
#include <random>
#include <sstream>

#include "coremwm/errors.h"
#include "coremwm/graph.h"
#include "test_util.h"

namespace coremwm {
namespace {

using testing::parse_graph;

TEST(LoadEdgeList, BasicTwoEdges) {
  const auto g = parse_graph("a b 3\nb c 2");
  EXPECT_EQ(g.num_vertices(), 3u);
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edge(0).w, 3.0);
  EXPECT_EQ(g.edge(1).w, 2.0);
  EXPECT_EQ(g.edge(0).eid, 0u);
  EXPECT_EQ(g.edge(1).eid, 1u);
}

TEST(LoadEdgeList, KeepMaxMergesReversedPair) {
  std::istringstream in("a b 3\nb a 5");
  const auto g = load_edge_list(in, {.dedup = DedupPolicy::kKeepMax});
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edge(0).w, 5.0);
  const auto& d = g.dictionary();
  EXPECT_EQ(d.label(std::min(g.edge(0).u, g.edge(0).v)), "a");
}

TEST(LoadEdgeList, SumPolicyAdds) {
  std::istringstream in("a b 3\nb a 5\nb c 1");
  const auto g = load_edge_list(in, {.dedup = DedupPolicy::kSum});
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edge(0).w, 8.0);
}

TEST(LoadEdgeList, DuplicateUnderErrorPolicyCitesLine) {
  std::istringstream in("a b 3\nb a 5");
  try {
    load_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(LoadEdgeList, CommentsBlankLinesAndSpaces) {
  const auto g = parse_graph("# header\n\nx\ty\t1.5\n  y   z  2 \n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(LoadEdgeList, MalformedLineReportsLineNumber) {
  std::istringstream in("a b 1\nc d\n");
  try {
    load_edge_list(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream bad_weight("a b x\n");
  EXPECT_THROW(load_edge_list(bad_weight), ParseError);
}

TEST(LoadEdgeList, RejectsSelfLoop) {
  std::istringstream in("a a 1\n");
  EXPECT_THROW(load_edge_list(in), ParseError);
}

TEST(LoadEdgeList, NonPositiveWeights) {
  std::istringstream in("a b 0\nb c -1\nc d 2\n");
  EXPECT_THROW(load_edge_list(in), ParseError);
  std::istringstream again("a b 0\nb c -1\nc d 2\n");
  const auto g = load_edge_list(again, {.drop_nonpositive = true});
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edge(0).w, 2.0);
}

TEST(LoadEdgeList, MissingFileIsIoError) {
  EXPECT_THROW(load_edge_list_file("/nonexistent/graph.txt"), IoError);
}

TEST(CanonicalSort, WeightDescending) {
  const auto g = WeightedGraph::from_edges(
      4, {{.eid = 1, .u = 0, .v = 1, .w = 2}, {.eid = 2, .u = 2, .v = 3, .w = 5}});
  const auto s = canonical_sort(g);
  EXPECT_EQ(s[0].eid, 2u);
  EXPECT_EQ(s[1].eid, 1u);
}

TEST(CanonicalSort, EidBreaksTies) {
  const auto g = WeightedGraph::from_edges(
      4, {{.eid = 2, .u = 2, .v = 3, .w = 5}, {.eid = 1, .u = 0, .v = 1, .w = 5}});
  const auto s = canonical_sort(g);
  EXPECT_EQ(s[0].eid, 1u);
  EXPECT_EQ(s[1].eid, 2u);
}

TEST(CanonicalSort, MatchesIndependentReferenceOn1000Edges) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> w(1, 20);  // many ties
  std::vector<WeightedEdge> edges;
  for (VertexId i = 0; edges.size() < 1000; ++i) {
    edges.push_back({.eid = edges.size(), .u = 2 * i, .v = 2 * i + 1,
                     .w = static_cast<double>(w(rng))});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  const auto g = WeightedGraph::from_edges(2000, edges);

  // Reference: sort (-w, eid) tuples with the standard tuple ordering.
  std::vector<std::pair<double, EdgeId>> ref;
  for (const auto& e : edges) ref.emplace_back(-e.w, e.eid);
  std::sort(ref.begin(), ref.end());

  const auto s = canonical_sort(g);
  ASSERT_EQ(s.size(), ref.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].eid, ref[i].second) << "position " << i;
  }
  EXPECT_EQ(canonical_sort(g), s);  // deterministic
}

TEST(CanonicalSort, InputOrderDoesNotMatter) {
  std::mt19937_64 rng(7);
  auto g1 = testing::random_graph(30, 0.3, rng, /*integer_weights=*/true);
  std::vector<WeightedEdge> shuffled(g1.edges().begin(), g1.edges().end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const auto g2 = WeightedGraph::from_edges(30, shuffled);
  EXPECT_EQ(canonical_sort(g1), canonical_sort(g2));
}

TEST(WeightedGraph, ValidationRejectsBadEdges) {
  EXPECT_THROW(WeightedGraph::from_edges(2, {{.eid = 0, .u = 0, .v = 2, .w = 1}}),
               std::invalid_argument);
  EXPECT_THROW(WeightedGraph::from_edges(2, {{.eid = 0, .u = 1, .v = 1, .w = 1}}),
               std::invalid_argument);
  EXPECT_THROW(WeightedGraph::from_edges(2, {{.eid = 0, .u = 0, .v = 1, .w = 0}}),
               std::invalid_argument);
  EXPECT_THROW(WeightedGraph::from_edges(
                   3, {{.eid = 0, .u = 0, .v = 1, .w = 1},
                       {.eid = 1, .u = 1, .v = 0, .w = 2}}),
               std::invalid_argument);
  EXPECT_THROW(WeightedGraph::from_edges(
                   4, {{.eid = 0, .u = 0, .v = 1, .w = 1},
                       {.eid = 0, .u = 2, .v = 3, .w = 2}}),
               std::invalid_argument);
}

TEST(VertexDictionary, BijectionAndPersistence) {
  const auto g = parse_graph("alice bob 1\nbob carol 2\ncarol alice 3\n");
  const auto& d = g.dictionary();
  for (VertexId v = 0; v < d.size(); ++v) EXPECT_EQ(d.id(d.label(v)), v);
  EXPECT_THROW(d.id("dave"), std::out_of_range);
  std::ostringstream out;
  d.write(out);
  EXPECT_EQ(out.str(), "alice\t0\nbob\t1\ncarol\t2\n");
}

TEST(RoundTrip, WriteThenLoadPreservesEdgeMultiset) {
  std::mt19937_64 rng(3);
  const auto g = testing::random_graph(25, 0.4, rng);
  std::ostringstream out;
  write_edge_list(g, out);
  const auto h = parse_graph(out.str());
  ASSERT_EQ(h.num_edges(), g.num_edges());
  std::map<std::pair<std::string, std::string>, double> a, b;
  auto key = [](const WeightedGraph& gr, const WeightedEdge& e) {
    auto x = gr.dictionary().label(e.u);
    auto y = gr.dictionary().label(e.v);
    if (x > y) std::swap(x, y);
    return std::make_pair(x, y);
  };
  for (const auto& e : g.edges()) a[key(g, e)] = e.w;
  for (const auto& e : h.edges()) b[key(h, e)] = e.w;
  EXPECT_EQ(a, b);  // exact: weights are written in shortest round-trip form
}

TEST(DedupPolicy, Parse) {
  EXPECT_EQ(parse_dedup_policy("error"), DedupPolicy::kError);
  EXPECT_EQ(parse_dedup_policy("max"), DedupPolicy::kKeepMax);
  EXPECT_EQ(parse_dedup_policy("keep-max"), DedupPolicy::kKeepMax);
  EXPECT_EQ(parse_dedup_policy("sum"), DedupPolicy::kSum);
  EXPECT_THROW(parse_dedup_policy("min"), ConfigError);
}

}  // namespace
}  // namespace coremwm
