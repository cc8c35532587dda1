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

#include "coremwm/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "coremwm/errors.h"

namespace coremwm {

namespace {

std::uint64_t pair_code(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool is_sep(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

// Splits on runs of tabs/spaces.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool parse_weight(std::string_view text, double& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

VertexId VertexDictionary::intern(std::string_view label) {
  auto it = index_.find(std::string(label));
  if (it != index_.end()) return it->second;
  const auto id = static_cast<VertexId>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  return id;
}

void VertexDictionary::add_numeric(std::size_t count) {
  labels_.reserve(labels_.size() + count);
  for (std::size_t i = 0; i < count; ++i) {
    intern(std::to_string(labels_.size()));
  }
}

VertexId VertexDictionary::id(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw std::out_of_range("unknown vertex label '" + std::string(label) +
                            "'");
  }
  return it->second;
}

bool VertexDictionary::contains(std::string_view label) const {
  return index_.count(std::string(label)) != 0;
}

void VertexDictionary::write(std::ostream& out) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out << labels_[i] << '\t' << i << '\n';
  }
}

WeightedGraph::WeightedGraph(std::shared_ptr<const VertexDictionary> dict,
                             std::vector<WeightedEdge> edges)
    : dict_(std::move(dict)), edges_(std::move(edges)) {
  const std::size_t n = dict_->size();
  std::vector<std::uint64_t> pairs;
  std::vector<EdgeId> eids;
  pairs.reserve(edges_.size());
  eids.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge " + std::to_string(e.eid) +
                                  " has an endpoint outside 0..n-1");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("edge " + std::to_string(e.eid) +
                                  " is a self-loop");
    }
    if (!std::isfinite(e.w) || !(e.w > 0.0)) {
      throw std::invalid_argument("edge " + std::to_string(e.eid) +
                                  " has a non-positive or non-finite weight");
    }
    pairs.push_back(pair_code(e.u, e.v));
    eids.push_back(e.eid);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
    throw std::invalid_argument("duplicate vertex pair in edge set");
  }
  std::sort(eids.begin(), eids.end());
  if (std::adjacent_find(eids.begin(), eids.end()) != eids.end()) {
    throw std::invalid_argument("duplicate edge id in edge set");
  }
}

WeightedGraph WeightedGraph::from_edges(std::size_t n,
                                        std::vector<WeightedEdge> edges) {
  auto dict = std::make_shared<VertexDictionary>();
  dict->add_numeric(n);
  return WeightedGraph(std::move(dict), std::move(edges));
}

WeightedGraph WeightedGraph::subgraph(std::vector<WeightedEdge> edges) const {
  return WeightedGraph(Unchecked{}, dict_, std::move(edges));
}

double WeightedGraph::total_weight() const {
  double sum = 0.0;
  for (const auto& e : edges_) sum += e.w;
  return sum;
}

WeightedGraph load_edge_list(std::istream& in, const LoadOptions& options) {
  auto dict = std::make_shared<VertexDictionary>();
  std::vector<WeightedEdge> edges;
  // pair code -> index into `edges`
  std::unordered_map<std::uint64_t, std::size_t> seen;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    std::size_t first = 0;
    while (first < view.size() && is_sep(view[first])) ++first;
    if (first == view.size() || view[first] == '#') continue;

    const auto fields = split_fields(view);
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 fields 'u v w', got " +
                                    std::to_string(fields.size()));
    }
    double w = 0.0;
    if (!parse_weight(fields[2], w) || !std::isfinite(w)) {
      throw ParseError(line_no,
                       "malformed weight '" + std::string(fields[2]) + "'");
    }
    if (fields[0] == fields[1]) {
      throw ParseError(line_no,
                       "self-loop on vertex '" + std::string(fields[0]) + "'");
    }
    if (w <= 0.0) {
      if (options.drop_nonpositive) continue;
      throw ParseError(line_no, "non-positive weight " +
                                    std::string(fields[2]) +
                                    " (use drop_nonpositive to skip)");
    }
    const VertexId u = dict->intern(fields[0]);
    const VertexId v = dict->intern(fields[1]);
    const auto code = pair_code(u, v);
    auto it = seen.find(code);
    if (it == seen.end()) {
      seen.emplace(code, edges.size());
      edges.push_back({static_cast<EdgeId>(edges.size()), u, v, w});
      continue;
    }
    WeightedEdge& prev = edges[it->second];
    switch (options.dedup) {
      case DedupPolicy::kError:
        throw ParseError(line_no, "duplicate edge (" + std::string(fields[0]) +
                                      ", " + std::string(fields[1]) + ")");
      case DedupPolicy::kKeepMax:
        prev.w = std::max(prev.w, w);
        break;
      case DedupPolicy::kSum:
        prev.w += w;
        break;
    }
  }
  if (in.bad()) throw IoError("read error while loading edge list");
  return WeightedGraph(std::move(dict), std::move(edges));
}

WeightedGraph load_edge_list_file(const std::string& path,
                                  const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_edge_list(in, options);
}

void canonical_sort_in_place(std::vector<WeightedEdge>& edges) {
  std::sort(edges.begin(), edges.end(), edge_precedes);
}

std::vector<WeightedEdge> canonical_sort(const WeightedGraph& graph) {
  std::vector<WeightedEdge> sorted(graph.edges().begin(), graph.edges().end());
  canonical_sort_in_place(sorted);
  return sorted;
}

void write_edge_list(const WeightedGraph& graph, std::ostream& out) {
  const auto& dict = graph.dictionary();
  for (const auto& e : graph.edges()) {
    out << dict.label(e.u) << '\t' << dict.label(e.v) << '\t'
        << format_weight(e.w) << '\n';
  }
}

DedupPolicy parse_dedup_policy(std::string_view name) {
  if (name == "error") return DedupPolicy::kError;
  if (name == "max" || name == "keep-max") return DedupPolicy::kKeepMax;
  if (name == "sum") return DedupPolicy::kSum;
  throw ConfigError("unknown dedup policy '" + std::string(name) + "'");
}

std::string format_weight(double w) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

}  // namespace coremwm
