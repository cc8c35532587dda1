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

// Executable charging argument for the greedy coreset.
//
// Fix an optimal matching M* of G and one machine (machine 0 here). An edge
// e of M* is *free* on that machine when greedy, run on the machine's
// partition and stopped right before e's position in the global order, has
// matched neither endpoint; otherwise it is *blocked*, and the coreset edge
// that matched the endpoint first is its *certificate* (at least as heavy as
// e). Free edges that made it into the union H are *available*.
//
// partition_types() groups blocked edges with their certificates and nearby
// available free edges into type 1/2/3 sets; charging_matching() turns those
// groups into a matching of H whose weight certifies the coreset bounds. All
// of it needs M*, so it only runs at exact-oracle scale.

#ifndef COREMWM_ANALYSIS_H_
#define COREMWM_ANALYSIS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coremwm/clustering.h"
#include "coremwm/graph.h"
#include "coremwm/greedy.h"
#include "coremwm/oracle.h"

namespace coremwm {

struct FreeBlocked {
  std::vector<WeightedEdge> free;
  std::vector<WeightedEdge> blocked;
  // blocked eid -> certificate edge of the machine's matching
  std::unordered_map<EdgeId, WeightedEdge> certificate;
};

// `machine_run` is greedy() on the machine's partition; its trace keys are
// global so OPT edges outside the partition classify too. Throws ConfigError
// when `opt_edges` is not a matching over the run's vertex set.
FreeBlocked classify_free_blocked(const GreedyResult& machine_run,
                                  std::span<const WeightedEdge> opt_edges);
FreeBlocked classify_free_blocked(const WeightedGraph& partition,
                                  std::span<const WeightedEdge> opt_edges);

struct Type1Set {
  WeightedEdge e;
  std::optional<WeightedEdge> f;  // blocked partner, or none
  WeightedEdge cert_e;
};
struct Type2Set {
  WeightedEdge e;
  WeightedEdge f;  // available free
  WeightedEdge cert_e;
};
struct Type3Set {
  WeightedEdge e;
  WeightedEdge f;  // available free
  WeightedEdge z;  // blocked, certified by cert_z
  WeightedEdge cert_e;
  WeightedEdge cert_z;
};

struct TypeSets {
  std::vector<WeightedEdge> f10, f12, f13;
  std::vector<WeightedEdge> b11, b12, b13;
  std::vector<WeightedEdge> m11, m12, m13;
  std::vector<Type1Set> type1;
  std::vector<Type2Set> type2;
  std::vector<Type3Set> type3;
};

double weight_of(std::span<const WeightedEdge> edges);

// The grouping loop: repeatedly take the heaviest remaining blocked edge e,
// its certificate e', and the other remaining free-available/blocked edge f
// touching e' (none if absent; heaviest if several), then
//   type 1  f blocked or none       -> remove e, f from the blocked set
//   type 3  f free and f touches another certificate e'' of a remaining
//           blocked z               -> remove f, e, z
//   type 2  otherwise               -> remove f, e
// Leftover available free edges form f10. Throws InternalError when a
// blocked edge has no certificate or a certificate is not in `m1`.
TypeSets partition_types(std::span<const WeightedEdge> free_available,
                         std::span<const WeightedEdge> blocked,
                         const Matching& m1,
                         const std::unordered_map<EdgeId, WeightedEdge>&
                             certificates);

struct TypeCheck {
  bool ok = true;
  std::size_t type1_violations = 0;
  std::size_t type2_violations = 0;
  std::size_t type3_violations = 0;
};

// Per group:
//   type 1: w(e') >= (w(e) + w(f)) / 2
//   type 2: w(f) >= w(e') >= w(e)
//   type 3: max(w(f), w(e') + w(e'')) >= (w(e) + w(f) + w(z)) / 2
TypeCheck check_type_inequalities(const TypeSets& sets);

// w(F'_{1,2}) >= w(B_{1,2}) and w(F'_{1,3}) >= w(B_{1,3}) / 2.
bool check_free_blocked_balance(const TypeSets& sets);

struct ChargingResult {
  Matching matching;
  double half_bound = 0.0;    // (w(F') + w(B)) / 2
  double strong_bound = 0.0;  // w(F10) + w(B11)/2 + w(F12) + max(w(F13), w(B13))
  bool meets_half_bound = false;
  bool meets_strong_bound = false;
};

// Type 1 -> e'; type 2 -> f; type 3 -> f or {e', e''}, whichever is heavier;
// plus all of f10. Throws InternalError if the result is not a matching.
ChargingResult charging_matching(const TypeSets& sets,
                                 std::size_t num_vertices);

// w(M1) >= w(B11)/2 + w(B12) + w(B13).
bool m1_lower_bound_check(const TypeSets& sets, const Matching& m1);

struct AnalysisOptions {
  ClusterConfig cluster;
  std::uint32_t machine = 0;
  // Both G and H go through the oracle; H can have up to k*n/2 edges.
  OracleLimits limits{.max_edges = 192, .max_vertices = 20};
};

// One row per pipeline run. The six set weights are the LP variables before
// normalization.
struct AnalysisRow {
  std::uint64_t seed = 0;
  double f10 = 0, f12 = 0, f13 = 0;
  double b11 = 0, b12 = 0, b13 = 0;
  double m1 = 0;
  double opt_g = 0;
  double opt_h = 0;
  double free_all = 0;  // w(F_1), available or not
  double output = 0;    // best-of pipeline output
  double greedy_h = 0;
  double charging = 0;
  std::size_t union_edges = 0;

  bool types_ok = false;
  bool m1_bound_ok = false;
  bool balance_ok = false;
  bool charging_valid = false;
  bool charging_half_ok = false;
  bool charging_strong_ok = false;
  bool charging_below_opt_h = false;

  bool all_checks_pass() const {
    return types_ok && m1_bound_ok && balance_ok && charging_valid &&
           charging_half_ok && charging_strong_ok && charging_below_opt_h;
  }
};

// Runs the best-of pipeline, the oracle on G and H, classification on
// options.machine, the grouping and every check. Throws LimitError when G is
// beyond the oracle limits.
AnalysisRow analyze_run(const WeightedGraph& graph,
                        const AnalysisOptions& options);

void write_analysis_header(std::ostream& out);
void write_analysis_row(const AnalysisRow& row, std::ostream& out);

// Relative tolerance for inequalities between sums of float weights.
inline constexpr double kSumTolerance = 1e-9;
bool approx_ge(double lhs, double rhs);

}  // namespace coremwm

#endif  // COREMWM_ANALYSIS_H_
