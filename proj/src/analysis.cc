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

#include "coremwm/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "coremwm/errors.h"
#include "coremwm/pipeline.h"

namespace coremwm {

namespace {

struct CanonicalLess {
  bool operator()(const WeightedEdge& a, const WeightedEdge& b) const {
    return edge_precedes(a, b);
  }
};

using EdgeSet = std::set<WeightedEdge, CanonicalLess>;

VertexId other_end(const WeightedEdge& e, VertexId v) {
  return e.u == v ? e.v : e.u;
}

bool touches(const WeightedEdge& e, VertexId v) { return e.u == v || e.v == v; }

// Heaviest of two optional candidates.
std::optional<WeightedEdge> heavier(std::optional<WeightedEdge> a,
                                    std::optional<WeightedEdge> b) {
  if (!a) return b;
  if (!b) return a;
  return edge_precedes(*a, *b) ? a : b;
}

}  // namespace

bool approx_ge(double lhs, double rhs) {
  return lhs >= rhs - kSumTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double weight_of(std::span<const WeightedEdge> edges) {
  std::vector<WeightedEdge> sorted(edges.begin(), edges.end());
  canonical_sort_in_place(sorted);
  double sum = 0.0;
  for (const auto& e : sorted) sum += e.w;
  return sum;
}

FreeBlocked classify_free_blocked(const GreedyResult& machine_run,
                                  std::span<const WeightedEdge> opt_edges) {
  const auto& trace = machine_run.trace;
  const auto& matching = machine_run.matching;
  const std::size_t n = trace.num_vertices();
  std::vector<bool> used(n, false);
  for (const auto& e : opt_edges) {
    if (e.u >= n || e.v >= n || e.u == e.v || used[e.u] || used[e.v]) {
      throw ConfigError("classify_free_blocked: OPT edge set is not a matching");
    }
    used[e.u] = used[e.v] = true;
  }

  FreeBlocked out;
  for (const auto& e : opt_edges) {
    const auto pos = OrderKey::of(e);
    const bool u_blocked = trace.matched_before(e.u, pos);
    const bool v_blocked = trace.matched_before(e.v, pos);
    if (!u_blocked && !v_blocked) {
      out.free.push_back(e);
      continue;
    }
    std::optional<WeightedEdge> cert;
    if (u_blocked) cert = matching.edge_at(e.u);
    if (v_blocked) cert = heavier(cert, matching.edge_at(e.v));
    out.blocked.push_back(e);
    out.certificate.emplace(e.eid, *cert);
  }
  return out;
}

FreeBlocked classify_free_blocked(const WeightedGraph& partition,
                                  std::span<const WeightedEdge> opt_edges) {
  return classify_free_blocked(greedy(partition), opt_edges);
}

TypeSets partition_types(
    std::span<const WeightedEdge> free_available,
    std::span<const WeightedEdge> blocked, const Matching& m1,
    const std::unordered_map<EdgeId, WeightedEdge>& certificates) {
  EdgeSet free_set(free_available.begin(), free_available.end());
  EdgeSet blocked_set(blocked.begin(), blocked.end());

  // OPT edge (free-available or blocked) at each vertex.
  std::map<VertexId, WeightedEdge> opt_at;
  for (const auto* group : {&free_available, &blocked}) {
    for (const auto& e : *group) {
      opt_at[e.u] = e;
      opt_at[e.v] = e;
    }
  }
  // certificate eid -> blocked edges it certifies
  std::map<EdgeId, std::vector<WeightedEdge>> certified_by;
  for (const auto& e : blocked) {
    auto it = certificates.find(e.eid);
    if (it == certificates.end()) {
      throw InternalError("blocked edge " + std::to_string(e.eid) +
                          " has no certificate");
    }
    if (!m1.contains(it->second)) {
      throw InternalError("certificate of edge " + std::to_string(e.eid) +
                          " is not in the machine's matching");
    }
    certified_by[it->second.eid].push_back(e);
  }

  auto remaining = [&](const WeightedEdge& e) {
    return free_set.count(e) != 0 || blocked_set.count(e) != 0;
  };

  TypeSets out;
  while (!blocked_set.empty()) {
    const WeightedEdge e = *blocked_set.begin();
    const WeightedEdge cert = certificates.at(e.eid);

    std::optional<WeightedEdge> f;
    for (VertexId x : {cert.u, cert.v}) {
      auto it = opt_at.find(x);
      if (it == opt_at.end() || it->second.eid == e.eid) continue;
      if (!remaining(it->second)) continue;
      f = heavier(f, it->second);
    }

    if (!f || blocked_set.count(*f) != 0) {
      out.type1.push_back({e, f, cert});
      out.b11.push_back(e);
      out.m11.push_back(cert);
      blocked_set.erase(e);
      if (f) {
        out.b11.push_back(*f);
        blocked_set.erase(*f);
      }
      continue;
    }

    // f is an available free edge. Look for another certificate on f whose
    // blocked edge is still in play.
    std::optional<WeightedEdge> z;
    std::optional<WeightedEdge> cert_z;
    for (VertexId x : {f->u, f->v}) {
      if (!m1.is_matched(x)) continue;
      const WeightedEdge& g = m1.edge_at(x);
      if (g.eid == cert.eid) continue;
      auto it = certified_by.find(g.eid);
      if (it == certified_by.end()) continue;
      for (const auto& candidate : it->second) {
        if (candidate.eid == e.eid || blocked_set.count(candidate) == 0) {
          continue;
        }
        auto pick = heavier(z, candidate);
        if (!z || pick->eid != z->eid) {
          z = candidate;
          cert_z = g;
        }
      }
    }

    free_set.erase(*f);
    blocked_set.erase(e);
    if (z) {
      out.type3.push_back({e, *f, *z, cert, *cert_z});
      out.f13.push_back(*f);
      out.b13.push_back(e);
      out.b13.push_back(*z);
      out.m13.push_back(cert);
      out.m13.push_back(*cert_z);
      blocked_set.erase(*z);
    } else {
      out.type2.push_back({e, *f, cert});
      out.f12.push_back(*f);
      out.b12.push_back(e);
      out.m12.push_back(cert);
    }
  }
  out.f10.assign(free_set.begin(), free_set.end());

  // M11, M12, M13 must be disjoint subsets of M1.
  std::set<EdgeId> certs_used;
  for (const auto* group : {&out.m11, &out.m12, &out.m13}) {
    for (const auto& c : *group) {
      if (!certs_used.insert(c.eid).second) {
        throw InternalError("certificate " + std::to_string(c.eid) +
                            " assigned to two groups");
      }
    }
  }
  return out;
}

TypeCheck check_type_inequalities(const TypeSets& sets) {
  TypeCheck check;
  for (const auto& t : sets.type1) {
    const double fw = t.f ? t.f->w : 0.0;
    if (!approx_ge(t.cert_e.w, 0.5 * (t.e.w + fw))) ++check.type1_violations;
  }
  for (const auto& t : sets.type2) {
    if (!(approx_ge(t.f.w, t.cert_e.w) && approx_ge(t.cert_e.w, t.e.w))) {
      ++check.type2_violations;
    }
  }
  for (const auto& t : sets.type3) {
    const double lhs = std::max(t.f.w, t.cert_e.w + t.cert_z.w);
    if (!approx_ge(lhs, 0.5 * (t.e.w + t.f.w + t.z.w))) {
      ++check.type3_violations;
    }
  }
  check.ok = check.type1_violations == 0 && check.type2_violations == 0 &&
             check.type3_violations == 0;
  return check;
}

bool check_free_blocked_balance(const TypeSets& sets) {
  return approx_ge(weight_of(sets.f12), weight_of(sets.b12)) &&
         approx_ge(weight_of(sets.f13), 0.5 * weight_of(sets.b13));
}

ChargingResult charging_matching(const TypeSets& sets,
                                 std::size_t num_vertices) {
  std::vector<WeightedEdge> chosen;
  for (const auto& t : sets.type1) chosen.push_back(t.cert_e);
  for (const auto& t : sets.type2) chosen.push_back(t.f);
  for (const auto& t : sets.type3) {
    if (t.f.w >= t.cert_e.w + t.cert_z.w) {
      chosen.push_back(t.f);
    } else {
      chosen.push_back(t.cert_e);
      chosen.push_back(t.cert_z);
    }
  }
  chosen.insert(chosen.end(), sets.f10.begin(), sets.f10.end());

  ChargingResult result;
  // from_edges throws InternalError on a vertex clash.
  result.matching = Matching::from_edges(num_vertices, std::move(chosen));

  const double f_all =
      weight_of(sets.f10) + weight_of(sets.f12) + weight_of(sets.f13);
  const double b_all =
      weight_of(sets.b11) + weight_of(sets.b12) + weight_of(sets.b13);
  result.half_bound = 0.5 * (f_all + b_all);
  result.strong_bound = weight_of(sets.f10) + 0.5 * weight_of(sets.b11) +
                        weight_of(sets.f12) +
                        std::max(weight_of(sets.f13), weight_of(sets.b13));
  const double w = result.matching.total_weight();
  result.meets_half_bound = approx_ge(w, result.half_bound);
  result.meets_strong_bound = approx_ge(w, result.strong_bound);
  return result;
}

bool m1_lower_bound_check(const TypeSets& sets, const Matching& m1) {
  return approx_ge(m1.total_weight(), 0.5 * weight_of(sets.b11) +
                                          weight_of(sets.b12) +
                                          weight_of(sets.b13));
}

AnalysisRow analyze_run(const WeightedGraph& graph,
                        const AnalysisOptions& options) {
  options.cluster.validate();
  if (options.machine >= options.cluster.k) {
    throw ConfigError("analysis machine index out of range");
  }
  const std::size_t n = graph.num_vertices();
  const Matching opt = exact_mwm(graph, options.limits);

  PipelineConfig config;
  config.cluster = options.cluster;
  config.post.mode = PostMode::kBestOf;
  const PipelineResult run = run_pipeline(graph, config);

  const Clustering clustering = cluster(graph, options.cluster, config.isa);
  const GreedyResult machine_run =
      greedy(partition_subgraph(graph, clustering, options.machine));
  const Matching& m1 = machine_run.matching;
  if (!(m1 == run.per_machine[options.machine])) {
    throw InternalError("analysis rerun of the machine disagrees with pipeline");
  }

  const auto fb = classify_free_blocked(machine_run, opt.edges());
  std::set<EdgeId> in_h;
  for (const auto& e : run.union_graph.edges()) in_h.insert(e.eid);
  std::vector<WeightedEdge> available;
  for (const auto& e : fb.free) {
    if (in_h.count(e.eid) != 0) available.push_back(e);
  }

  const TypeSets sets = partition_types(available, fb.blocked, m1, fb.certificate);
  const ChargingResult charge = charging_matching(sets, n);

  AnalysisRow row;
  row.seed = options.cluster.seed;
  row.f10 = weight_of(sets.f10);
  row.f12 = weight_of(sets.f12);
  row.f13 = weight_of(sets.f13);
  row.b11 = weight_of(sets.b11);
  row.b12 = weight_of(sets.b12);
  row.b13 = weight_of(sets.b13);
  row.m1 = m1.total_weight();
  row.opt_g = opt.total_weight();
  row.opt_h = opt_weight(run.union_graph, options.limits);
  row.free_all = weight_of(fb.free);
  row.output = run.final.total_weight();
  {
    std::vector<WeightedEdge> h(run.union_graph.edges().begin(),
                                run.union_graph.edges().end());
    row.greedy_h = greedy_matching(n, h).total_weight();
  }
  row.charging = charge.matching.total_weight();
  row.union_edges = run.union_graph.num_edges();

  row.types_ok = check_type_inequalities(sets).ok;
  row.m1_bound_ok = m1_lower_bound_check(sets, m1);
  row.balance_ok = check_free_blocked_balance(sets);
  row.charging_valid = is_valid_matching(charge.matching.edges(), graph) &&
                       std::all_of(charge.matching.edges().begin(),
                                   charge.matching.edges().end(),
                                   [&](const WeightedEdge& e) {
                                     return in_h.count(e.eid) != 0;
                                   });
  row.charging_half_ok = charge.meets_half_bound;
  row.charging_strong_ok = charge.meets_strong_bound;
  row.charging_below_opt_h = approx_ge(row.opt_h, row.charging);
  return row;
}

void write_analysis_header(std::ostream& out) {
  out << "seed\tF10\tF12\tF13\tB11\tB12\tB13\tM1\topt_G\topt_H\tF1\toutput"
         "\tgreedy_H\tcharging\tunion_edges\tchecks\n";
}

void write_analysis_row(const AnalysisRow& row, std::ostream& out) {
  out << row.seed;
  for (double v : {row.f10, row.f12, row.f13, row.b11, row.b12, row.b13,
                   row.m1, row.opt_g, row.opt_h, row.free_all, row.output,
                   row.greedy_h, row.charging}) {
    out << '\t' << format_weight(v);
  }
  out << '\t' << row.union_edges << '\t'
      << (row.all_checks_pass() ? "pass" : "FAIL") << '\n';
}

}  // namespace coremwm
