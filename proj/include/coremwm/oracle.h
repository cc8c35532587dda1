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

#ifndef COREMWM_ORACLE_H_
#define COREMWM_ORACLE_H_

#include <cstddef>

#include "coremwm/graph.h"
#include "coremwm/greedy.h"

namespace coremwm {

// Exact maximum-weight matching by branch and bound. Exponential; only for
// ground truth on small graphs.
struct OracleLimits {
  std::size_t max_edges = 24;
  std::size_t max_vertices = 20;

  // Throws ConfigError for zero caps or max_vertices > 64.
  void validate() const;
};

// Maximum total weight; among optimal matchings, the one whose ascending eid
// list is lexicographically smallest. Throws LimitError past the caps.
Matching exact_mwm(const WeightedGraph& graph, const OracleLimits& limits = {});

double opt_weight(const WeightedGraph& graph, const OracleLimits& limits = {});

}  // namespace coremwm

#endif  // COREMWM_ORACLE_H_
