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

#pragma once

#include <optional>
#include <vector>

namespace inertia {

// Dense two-phase simplex for the small polytope problems used throughout:
// feasibility of info-set pieces, the linear-minimization oracle of the
// update solver, and the positive-weights program of the Bayesian
// representation. Problems here have at most a few dozen variables, so a
// tableau method with Bland's rule is plenty.

enum class LpRelation { LessEq, Eq, GreaterEq };

struct LpConstraint {
  std::vector<double> a;
  LpRelation rel = LpRelation::LessEq;
  double b = 0.0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;       // basic solution (a vertex), length n
  double objective = 0.0;
};

// min c.x subject to the constraints and x >= 0.
LpResult solve_lp(const std::vector<double>& c,
                  const std::vector<LpConstraint>& constraints);

// Phase-1 only: a feasible vertex of {x >= 0, constraints}, if any.
std::optional<std::vector<double>> lp_feasible_point(
    int n, const std::vector<LpConstraint>& constraints);

}  // namespace inertia
