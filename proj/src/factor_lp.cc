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

#include "coremwm/factor_lp.h"

#include <cmath>
#include <set>

#include "coremwm/analysis.h"
#include "coremwm/errors.h"

namespace coremwm {

namespace {

using Point = std::array<Rational, kNumLpVars>;

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

LpConstraint make(std::string label, Sense sense, Rational rhs,
                  std::initializer_list<std::pair<int, Rational>> terms) {
  LpConstraint c;
  c.label = std::move(label);
  c.sense = sense;
  c.rhs = rhs;
  for (const auto& [var, coeff] : terms) c.coeffs[var] += coeff;
  return c;
}

// Dense tableau in canonical form: basis column of each row is a unit vector.
class Simplex {
 public:
  Simplex(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
          std::vector<int> basis)
      : a_(std::move(rows)), b_(std::move(rhs)), basis_(std::move(basis)) {}

  // Minimizes cost . x over columns with allowed[j]. Returns false when
  // unbounded.
  bool minimize(const std::vector<Rational>& cost,
                const std::vector<bool>& allowed) {
    const std::size_t cols = cost.size();
    for (;;) {
      int entering = -1;
      for (std::size_t j = 0; j < cols && entering < 0; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t r = 0; r < a_.size(); ++r) {
          if (!a_[r][j].is_zero()) reduced -= cost[basis_[r]] * a_[r][j];
        }
        if (reduced.sign() < 0) entering = static_cast<int>(j);
      }
      if (entering < 0) return true;

      int leave = -1;
      Rational best_ratio;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        const Rational& coeff = a_[r][entering];
        if (coeff.sign() <= 0) continue;
        const Rational ratio = b_[r] / coeff;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = static_cast<int>(r);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(entering));
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = a_[row][col];
    for (auto& x : a_[row]) x /= p;
    b_[row] /= p;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (r == row || a_[r][col].is_zero()) continue;
      const Rational f = a_[r][col];
      for (std::size_t j = 0; j < a_[r].size(); ++j) {
        if (!a_[row][j].is_zero()) a_[r][j] -= f * a_[row][j];
      }
      b_[r] -= f * b_[row];
    }
    basis_[row] = static_cast<int>(col);
  }

  bool is_basic(std::size_t col) const {
    for (int b : basis_) {
      if (b == static_cast<int>(col)) return true;
    }
    return false;
  }

  Rational value(std::size_t col) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] == static_cast<int>(col)) return b_[r];
    }
    return Rational(0);
  }

  std::size_t rows() const { return a_.size(); }
  int basis(std::size_t r) const { return basis_[r]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
};

}  // namespace

const char* lp_var_name(int var) {
  static constexpr const char* kNames[kNumLpVars] = {"a0", "a2", "a3", "b1",
                                                     "b2", "b3", "Z"};
  if (var < 0 || var >= kNumLpVars) throw ConfigError("bad LP variable index");
  return kNames[var];
}

Rational LpConstraint::lhs(const Point& x) const {
  Rational sum;
  for (int i = 0; i < kNumLpVars; ++i) sum += coeffs[i] * x[i];
  return sum;
}

bool LpConstraint::satisfied_by(const Point& x) const {
  const Rational v = lhs(x);
  switch (sense) {
    case Sense::kLe:
      return v <= rhs;
    case Sense::kGe:
      return v >= rhs;
    case Sense::kEq:
      return v == rhs;
  }
  return false;
}

std::size_t LpInstance::num_constraint_groups() const {
  std::set<std::string> labels;
  for (const auto& c : constraints) labels.insert(c.label);
  return labels.size() + 1;
}

LpInstance build_lp(std::optional<Rational> m1_cap) {
  if (m1_cap && (*m1_cap < Rational(0) || *m1_cap > Rational(1))) {
    throw ConfigError("M1 cap must lie in [0, 1], got " + m1_cap->str());
  }
  LpInstance lp;
  const Rational one(1);
  lp.constraints.push_back(make("const:1", Sense::kEq, one,
                                {{kA0, one}, {kA2, one}, {kA3, one},
                                 {kB1, one}, {kB2, one}, {kB3, one}}));
  lp.constraints.push_back(make("const:2", Sense::kGe, Rational(0),
                                {{kZ, one}, {kB1, -kHalf}, {kB2, -one},
                                 {kB3, -one}}));
  lp.constraints.push_back(make("const:3", Sense::kGe, Rational(0),
                                {{kZ, one}, {kA0, -kHalf}, {kB1, -kQuarter},
                                 {kA2, -kHalf}, {kA3, -kHalf}}));
  lp.constraints.push_back(make("const:4", Sense::kGe, Rational(0),
                                {{kZ, one}, {kA0, -kHalf}, {kB1, -kQuarter},
                                 {kA2, -kHalf}, {kB3, -kHalf}}));
  lp.constraints.push_back(make("const:5", Sense::kGe, Rational(0),
                                {{kA2, one}, {kB2, -one}}));
  lp.constraints.push_back(make("const:6", Sense::kGe, Rational(0),
                                {{kA3, one}, {kB3, -kHalf}}));
  if (m1_cap) {
    lp.constraints.push_back(make("cap", Sense::kLe, *m1_cap,
                                  {{kB1, kHalf}, {kB2, one}, {kB3, one}}));
  }
  for (int i = 0; i < kNumLpVars; ++i) {
    lp.lower[i] = Rational(0);
    lp.upper[i] = Rational(1);
  }
  lp.m1_cap = m1_cap;
  return lp;
}

bool lp_feasible(const LpInstance& instance, const Point& x) {
  for (int i = 0; i < kNumLpVars; ++i) {
    if (x[i] < instance.lower[i] || x[i] > instance.upper[i]) return false;
  }
  for (const auto& c : instance.constraints) {
    if (!c.satisfied_by(x)) return false;
  }
  return true;
}

LpSolution solve_lp(const LpInstance& instance) {
  for (int i = 0; i < kNumLpVars; ++i) {
    if (!instance.lower[i].is_zero()) {
      throw ConfigError("solve_lp expects zero lower bounds");
    }
  }
  // Rows: explicit constraints, then x_i <= upper_i.
  std::vector<LpConstraint> rows = instance.constraints;
  for (int i = 0; i < kNumLpVars; ++i) {
    LpConstraint c;
    c.label = "const:7";
    c.coeffs[i] = Rational(1);
    c.sense = Sense::kLe;
    c.rhs = instance.upper[i];
    rows.push_back(c);
  }

  // Columns: structural, one slack/surplus per inequality, one artificial per
  // row that has no slack to start the basis.
  const std::size_t m = rows.size();
  std::vector<std::vector<Rational>> a(m);
  std::vector<Rational> b(m);
  std::vector<int> basis(m, -1);
  std::vector<int> slack_of(m, -1);
  std::size_t next_slack = kNumLpVars;
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].sense != Sense::kEq) slack_of[r] = static_cast<int>(next_slack++);
  }
  std::size_t cols = next_slack;
  // Each row is scaled by +-1 so that rhs >= 0, preferring the orientation in
  // which its slack has coefficient +1 and can start the basis.
  std::vector<Rational> row_sign(m, Rational(1));
  std::vector<int> artificial_of(m, -1);
  for (std::size_t r = 0; r < m; ++r) {
    const int rhs_sign = rows[r].rhs.sign();
    const bool ge = rows[r].sense == Sense::kGe;
    if (rhs_sign < 0 || (rhs_sign == 0 && ge)) row_sign[r] = Rational(-1);
    const bool slack_positive =
        slack_of[r] >= 0 && ((rows[r].sense == Sense::kLe) == (row_sign[r].sign() > 0));
    if (!slack_positive) artificial_of[r] = static_cast<int>(cols++);
  }
  for (std::size_t r = 0; r < m; ++r) {
    const Rational sign = row_sign[r];
    a[r].assign(cols, Rational(0));
    for (int i = 0; i < kNumLpVars; ++i) a[r][i] = sign * rows[r].coeffs[i];
    if (slack_of[r] >= 0) {
      const Rational s = rows[r].sense == Sense::kLe ? Rational(1) : Rational(-1);
      a[r][slack_of[r]] = sign * s;
    }
    b[r] = sign * rows[r].rhs;
    if (artificial_of[r] >= 0) {
      a[r][artificial_of[r]] = Rational(1);
      basis[r] = artificial_of[r];
    } else {
      basis[r] = slack_of[r];
    }
  }

  Simplex simplex(std::move(a), std::move(b), std::move(basis));
  std::vector<bool> is_artificial(cols, false);
  for (int c : artificial_of) {
    if (c >= 0) is_artificial[c] = true;
  }

  std::vector<Rational> phase1(cols, Rational(0));
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_artificial[j]) phase1[j] = Rational(1);
  }
  std::vector<bool> all(cols, true);
  simplex.minimize(phase1, all);
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_artificial[j] && simplex.value(j).sign() != 0) {
      throw InternalError("factor LP is infeasible");
    }
  }
  // Pivot zero-valued artificials out where a structural column allows it.
  for (std::size_t r = 0; r < simplex.rows(); ++r) {
    if (!is_artificial[simplex.basis(r)]) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_artificial[j] && !simplex.at(r, j).is_zero()) {
        simplex.pivot(r, j);
        break;
      }
    }
  }

  std::vector<Rational> phase2(cols, Rational(0));
  phase2[kZ] = Rational(1);
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_artificial[j]) allowed[j] = false;
  }
  if (!simplex.minimize(phase2, allowed)) {
    throw InternalError("factor LP is unbounded");
  }

  LpSolution sol;
  for (int i = 0; i < kNumLpVars; ++i) sol.witness[i] = simplex.value(i);
  sol.z_star = sol.witness[kZ];
  if (!lp_feasible(instance, sol.witness)) {
    throw InternalError("simplex witness violates a constraint");
  }
  if (sol.z_star.is_zero()) throw InternalError("factor LP optimum is zero");
  sol.ratio = Rational(1) / sol.z_star;
  return sol;
}

EmpiricalLpReport empirical_lp_point(const AnalysisRow& row,
                                     const Rational& z_star) {
  const double parts[6] = {row.f10, row.f12, row.f13, row.b11, row.b12, row.b13};
  for (double v : parts) {
    if (!std::isfinite(v) || v < 0) {
      throw ConfigError("analysis row has a negative or non-finite set weight");
    }
  }
  if (!std::isfinite(row.output) || row.output < 0) {
    throw ConfigError("analysis row has a bad output weight");
  }

  EmpiricalLpReport rep;
  rep.o = 0.0;
  for (double v : parts) rep.o += v;
  if (rep.o == 0.0) {
    rep.degenerate = true;
    return rep;
  }
  for (int i = 0; i < 6; ++i) rep.point[i] = parts[i] / rep.o;
  rep.output_ratio = row.output / rep.o;
  rep.point[kZ] = rep.output_ratio;

  double sum = 0.0;
  for (int i = 0; i < 6; ++i) sum += rep.point[i];
  rep.const1_residual = sum - 1.0;
  rep.const1_ok = std::abs(rep.const1_residual) <= 1e-9;
  rep.const5_ok = approx_ge(row.f12, row.b12);
  rep.const6_ok = approx_ge(row.f13, 0.5 * row.b13);
  rep.slack = rep.output_ratio - z_star.to_double();
  rep.ratio_ok = approx_ge(rep.output_ratio, z_star.to_double());
  return rep;
}

}  // namespace coremwm
