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

#include <chrono>
#include <optional>

#include "coremwm/analysis.h"
#include "coremwm/errors.h"
#include "coremwm/factor_lp.h"

namespace coremwm {
namespace {

using Point = std::array<Rational, kNumLpVars>;

// Independent reference: enumerate every choice of 7 tight rows among the
// constraints and the 14 bound rows, solve by exact Gaussian elimination,
// keep the feasible vertices, minimise Z.
Rational vertex_enumeration_min(const LpInstance& lp) {
  struct Row {
    std::array<Rational, kNumLpVars> a;
    Rational b;
  };
  std::vector<Row> rows;
  for (const auto& c : lp.constraints) rows.push_back({c.coeffs, c.rhs});
  for (int i = 0; i < kNumLpVars; ++i) {
    Row lo{}, hi{};
    lo.a[i] = Rational(1);
    lo.b = lp.lower[i];
    hi.a[i] = Rational(1);
    hi.b = lp.upper[i];
    rows.push_back(lo);
    rows.push_back(hi);
  }
  const int r = static_cast<int>(rows.size());
  std::optional<Rational> best;
  std::vector<int> pick(kNumLpVars);
  auto solve = [&]() -> std::optional<Point> {
    std::array<std::array<Rational, kNumLpVars + 1>, kNumLpVars> m;
    for (int i = 0; i < kNumLpVars; ++i) {
      for (int j = 0; j < kNumLpVars; ++j) m[i][j] = rows[pick[i]].a[j];
      m[i][kNumLpVars] = rows[pick[i]].b;
    }
    for (int col = 0; col < kNumLpVars; ++col) {
      int p = col;
      while (p < kNumLpVars && m[p][col].is_zero()) ++p;
      if (p == kNumLpVars) return std::nullopt;
      std::swap(m[p], m[col]);
      for (int i = 0; i < kNumLpVars; ++i) {
        if (i == col || m[i][col].is_zero()) continue;
        const Rational f = m[i][col] / m[col][col];
        for (int j = col; j <= kNumLpVars; ++j) m[i][j] -= f * m[col][j];
      }
    }
    Point x;
    for (int i = 0; i < kNumLpVars; ++i) x[i] = m[i][kNumLpVars] / m[i][i];
    return x;
  };
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == kNumLpVars) {
      if (auto x = solve(); x && lp_feasible(lp, *x)) {
        if (!best || (*x)[kZ] < *best) best = (*x)[kZ];
      }
      return;
    }
    for (int i = start; i < r; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return best.value();
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -3), Rational(-1, 3));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
  EXPECT_EQ(Rational(1, 3) / Rational(2), Rational(1, 6));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::parse("-2/6"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_THROW(Rational::parse("1e-1"), ConfigError);
  EXPECT_THROW(Rational::parse("abc"), ConfigError);
  EXPECT_THROW(Rational(1, 0), ConfigError);
  EXPECT_THROW(Rational(INT64_MAX) * Rational(2), LimitError);
}

TEST(BuildLp, BaseHasSevenConstraintGroups) {
  const auto lp = build_lp();
  EXPECT_EQ(lp.num_constraint_groups(), 7u);
  EXPECT_EQ(lp.constraints.size(), 6u);
  EXPECT_FALSE(lp.m1_cap.has_value());
  EXPECT_EQ(build_lp(Rational(1, 10)).num_constraint_groups(), 8u);
}

TEST(BuildLp, CapRange) {
  EXPECT_THROW(build_lp(Rational(-1, 10)), ConfigError);
  EXPECT_THROW(build_lp(Rational(11, 10)), ConfigError);
  EXPECT_NO_THROW(build_lp(Rational(0)));
  EXPECT_NO_THROW(build_lp(Rational(1)));
}

TEST(SolveLp, BaseIsOneThird) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sol = solve_lp(build_lp());
  const auto dt = std::chrono::steady_clock::now() - t0;
  EXPECT_EQ(sol.z_star, Rational(1, 3));
  EXPECT_EQ(sol.ratio, Rational(3));
  EXPECT_TRUE(lp_feasible(build_lp(), sol.witness));
  EXPECT_LT(std::chrono::duration<double>(dt).count(), 1.0);
}

TEST(SolveLp, CapZeroForcesBetaZero) {
  const auto sol = solve_lp(build_lp(Rational(0)));
  EXPECT_EQ(sol.z_star, Rational(1, 2));
  EXPECT_EQ(sol.ratio, Rational(2));
  for (int v : {kB1, kB2, kB3}) EXPECT_TRUE(sol.witness[v].is_zero());
}

TEST(SolveLp, CapOneTenthGivesRatioAboutTwoPointTwoTwo) {
  const auto sol = solve_lp(build_lp(Rational::parse("0.1")));
  EXPECT_NEAR(sol.ratio.to_double(), 2.22, 0.01);
}

TEST(SolveLp, CapOneIsVacuous) {
  EXPECT_EQ(solve_lp(build_lp(Rational(1))).z_star, solve_lp(build_lp()).z_star);
}

TEST(SolveLp, AgreesWithVertexEnumeration) {
  for (auto cap : {std::optional<Rational>{}, std::optional<Rational>{Rational(0)},
                   std::optional<Rational>{Rational(1, 10)},
                   std::optional<Rational>{Rational(1, 4)},
                   std::optional<Rational>{Rational(1)}}) {
    const auto lp = build_lp(cap);
    EXPECT_EQ(solve_lp(lp).z_star, vertex_enumeration_min(lp))
        << (cap ? cap->str() : "none");
  }
}

TEST(SolveLp, NonIncreasingOverGrid) {
  Rational prev = solve_lp(build_lp(Rational(0))).z_star;
  EXPECT_EQ(prev, Rational(1, 2));
  for (int i = 1; i <= 20; ++i) {
    const auto lp = build_lp(Rational(i, 20));
    const auto sol = solve_lp(lp);
    EXPECT_TRUE(lp_feasible(lp, sol.witness));
    EXPECT_LE(sol.z_star, prev) << i;
    prev = sol.z_star;
  }
  EXPECT_EQ(prev, Rational(1, 3));
}

TEST(EmpiricalLp, AllFreeRow) {
  AnalysisRow row;
  row.f10 = 3.0;
  row.output = 2.0;
  const auto rep = empirical_lp_point(row);
  EXPECT_FALSE(rep.degenerate);
  EXPECT_TRUE(rep.feasible());
  EXPECT_DOUBLE_EQ(rep.point[kA0], 1.0);
  EXPECT_TRUE(rep.ratio_ok);
}

TEST(EmpiricalLp, FlagsConstFiveViolation) {
  AnalysisRow row;
  row.f12 = 1.0;
  row.b12 = 2.0;
  row.output = 3.0;
  const auto rep = empirical_lp_point(row);
  EXPECT_FALSE(rep.const5_ok);
  EXPECT_TRUE(rep.const6_ok);
  EXPECT_FALSE(rep.feasible());
}

TEST(EmpiricalLp, MalformedRow) {
  AnalysisRow row;
  row.f10 = -1.0;
  EXPECT_THROW(empirical_lp_point(row), ConfigError);
  AnalysisRow empty;
  EXPECT_TRUE(empirical_lp_point(empty).degenerate);
}

}  // namespace
}  // namespace coremwm
