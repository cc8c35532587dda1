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

// The factor-revealing LP of the best-of greedy coreset, in exact rationals.
//
// Variables (all scaled by O = total weight of the six edge sets):
//   a0, a2, a3  available free weight in F10, F12, F13
//   b1, b2, b3  blocked weight in B11, B12, B13
//   Z           output weight
//
//   minimize Z subject to
//     const:1  a0 + a2 + a3 + b1 + b2 + b3 = 1
//     const:2  Z >= b1/2 + b2 + b3
//     const:3  Z >= (a0 + b1/2 + a2 + a3) / 2
//     const:4  Z >= (a0 + b1/2 + a2 + b3) / 2
//     const:5  a2 >= b2
//     const:6  a3 >= b3/2
//     const:7  every variable in [0, 1]
//   optional cap  b1/2 + b2 + b3 <= mu   (the M1 mass is at most mu)

#ifndef COREMWM_FACTOR_LP_H_
#define COREMWM_FACTOR_LP_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coremwm/rational.h"

namespace coremwm {

struct AnalysisRow;

enum LpVar : int { kA0 = 0, kA2, kA3, kB1, kB2, kB3, kZ, kNumLpVars };

const char* lp_var_name(int var);

enum class Sense { kLe, kGe, kEq };

struct LpConstraint {
  std::string label;  // "const:1" .. "const:6", "cap"
  std::array<Rational, kNumLpVars> coeffs{};
  Sense sense = Sense::kLe;
  Rational rhs;

  Rational lhs(const std::array<Rational, kNumLpVars>& x) const;
  bool satisfied_by(const std::array<Rational, kNumLpVars>& x) const;
};

struct LpInstance {
  std::vector<LpConstraint> constraints;
  // const:7, per variable.
  std::array<Rational, kNumLpVars> lower{};
  std::array<Rational, kNumLpVars> upper{};
  std::optional<Rational> m1_cap;

  // Distinct constraint groups, const:7 counted once: 7 for the base LP.
  std::size_t num_constraint_groups() const;
};

// Throws ConfigError when the cap is outside [0, 1].
LpInstance build_lp(std::optional<Rational> m1_cap = std::nullopt);

struct LpSolution {
  Rational z_star;
  std::array<Rational, kNumLpVars> witness{};
  Rational ratio;  // 1 / z_star
};

// Two-phase simplex over the rationals with Bland's rule; the witness is
// re-verified against every constraint and bound before returning. Throws
// InternalError when the instance is infeasible or unbounded, or the witness
// check fails.
LpSolution solve_lp(const LpInstance& instance);

// True iff x satisfies every constraint and bound exactly.
bool lp_feasible(const LpInstance& instance,
                 const std::array<Rational, kNumLpVars>& x);

// Per-seed point of an analysis row, normalized by O.
struct EmpiricalLpReport {
  bool degenerate = false;  // O == 0: nothing to normalize
  double o = 0.0;
  std::array<double, kNumLpVars> point{};
  double const1_residual = 0.0;
  bool const1_ok = true;
  bool const5_ok = true;
  bool const6_ok = true;
  double output_ratio = 0.0;  // output / O
  double slack = 0.0;         // output_ratio - z_star
  bool ratio_ok = true;

  bool feasible() const { return const1_ok && const5_ok && const6_ok; }
  bool ok() const { return feasible() && ratio_ok; }
};

// Throws ConfigError on negative or non-finite weights.
EmpiricalLpReport empirical_lp_point(const AnalysisRow& row,
                                     const Rational& z_star = Rational(1, 3));

}  // namespace coremwm

#endif  // COREMWM_FACTOR_LP_H_
