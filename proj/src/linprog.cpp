// Copyright 2026 The Inertia Authors
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

#include "inertia/linprog.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-8;

struct Tableau {
  int m = 0;            // rows
  int total = 0;        // columns (variables incl. slack/artificial)
  int n_struct = 0;     // structural variables
  int art_begin = 0;    // first artificial column
  std::vector<std::vector<double>> a;  // m x total
  std::vector<double> b;               // m
  std::vector<int> basis;              // m

  void pivot(int r, int s) {
    const double p = a[r][s];
    for (int j = 0; j < total; ++j) a[r][j] /= p;
    b[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = a[i][s];
      if (std::abs(f) < 1e-300) continue;
      for (int j = 0; j < total; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = s;
  }

  // Minimizes cost.x over the current tableau with Bland's rule.
  // Columns in [bar_begin, total) may not enter. Returns false if unbounded.
  bool run(const std::vector<double>& cost, int bar_begin) {
    for (;;) {
      // reduced costs: z_j - c_j = c_B . col_j - c_j; enter where positive
      int enter = -1;
      for (int j = 0; j < bar_begin; ++j) {
        double zj = 0.0;
        for (int i = 0; i < m; ++i) zj += cost[basis[i]] * a[i][j];
        if (zj - cost[j] > kPivotTol) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] > kPivotTol) {
          const double ratio = b[i] / a[i][enter];
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 &&
               (leave < 0 || basis[i] < basis[leave]))) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const std::vector<double>& c,
                  const std::vector<LpConstraint>& constraints) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(constraints.size());
  for (const auto& con : constraints) {
    if (static_cast<int>(con.a.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "LP constraint length differs from objective length");
    }
  }

  // Normalize rows to b >= 0 and count extra columns.
  std::vector<std::vector<double>> rows(m);
  std::vector<double> rhs(m);
  std::vector<LpRelation> rel(m);
  int n_slack = 0;
  for (int i = 0; i < m; ++i) {
    rows[i] = constraints[i].a;
    rhs[i] = constraints[i].b;
    rel[i] = constraints[i].rel;
    if (rhs[i] < 0) {
      for (double& v : rows[i]) v = -v;
      rhs[i] = -rhs[i];
      if (rel[i] == LpRelation::LessEq) rel[i] = LpRelation::GreaterEq;
      else if (rel[i] == LpRelation::GreaterEq) rel[i] = LpRelation::LessEq;
    }
    if (rel[i] != LpRelation::Eq) ++n_slack;
  }

  Tableau t;
  t.m = m;
  t.n_struct = n;
  t.art_begin = n + n_slack;
  t.total = t.art_begin + m;  // one artificial per row (unused ones stay 0)
  t.a.assign(m, std::vector<double>(t.total, 0.0));
  t.b = rhs;
  t.basis.assign(m, -1);

  int slack_at = n;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t.a[i][j] = rows[i][j];
    if (rel[i] == LpRelation::LessEq) {
      t.a[i][slack_at] = 1.0;
      t.basis[i] = slack_at;
      ++slack_at;
    } else if (rel[i] == LpRelation::GreaterEq) {
      t.a[i][slack_at] = -1.0;
      ++slack_at;
    }
    if (t.basis[i] < 0) {
      t.a[i][t.art_begin + i] = 1.0;
      t.basis[i] = t.art_begin + i;
    }
  }

  // Phase 1: minimize the sum of artificials.
  bool need_phase1 = false;
  for (int i = 0; i < m; ++i) need_phase1 |= (t.basis[i] >= t.art_begin);
  if (need_phase1) {
    std::vector<double> cost1(t.total, 0.0);
    for (int j = t.art_begin; j < t.total; ++j) cost1[j] = 1.0;
    if (!t.run(cost1, t.art_begin)) {
      // Phase-1 objective is bounded below by 0; cannot be unbounded.
      throw Error(ErrorCode::SolverFailure, "phase-1 simplex reported unbounded");
    }
    double art_sum = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= t.art_begin) art_sum += t.b[i];
    }
    if (art_sum > kFeasTol) return {LpStatus::Infeasible, {}, 0.0};
    // Drive remaining artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < t.art_begin) continue;
      int s = -1;
      for (int j = 0; j < t.art_begin; ++j) {
        if (std::abs(t.a[i][j]) > kPivotTol) {
          s = j;
          break;
        }
      }
      if (s >= 0) t.pivot(i, s);
      // else: redundant row; the artificial stays basic at value zero.
    }
  }

  // Phase 2.
  std::vector<double> cost2(t.total, 0.0);
  for (int j = 0; j < n; ++j) cost2[j] = c[j];
  if (!t.run(cost2, t.art_begin)) return {LpStatus::Unbounded, {}, 0.0};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) res.x[t.basis[i]] = t.b[i];
  }
  res.objective = 0.0;
  for (int j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

std::optional<std::vector<double>> lp_feasible_point(
    int n, const std::vector<LpConstraint>& constraints) {
  std::vector<double> c(n, 0.0);
  LpResult r = solve_lp(c, constraints);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.x;
}

}  // namespace inertia
