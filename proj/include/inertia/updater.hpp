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

#include <string>
#include <vector>

#include "inertia/divergence.hpp"
#include "inertia/infoset.hpp"

namespace inertia {

struct UpdateOptions {
  double tol = 1e-9;       // objective accuracy target of the generic solver
  double tie_tol = 1e-9;   // objective tie tolerance between pieces
  int max_iter = 50000;
  bool disable_closed_forms = false;  // force the generic solver everywhere
};

enum class UpdateMethod {
  PriorInSet,
  Singleton,
  ClosedFormAlphaEvent,
  ClosedFormInterval,
  ClosedFormDisjointAlphaPair,
  GenericSolver,
};

const char* update_method_name(UpdateMethod m);

struct PieceOutcome {
  int index = 0;
  bool empty = false;
  Belief posterior;        // piece minimizer (unset when empty)
  double objective = 0.0;  // full divergence value at the minimizer
  UpdateMethod method = UpdateMethod::GenericSolver;
  double kkt_residual = 0.0;
};

struct UpdateResult {
  Belief posterior;
  double objective = 0.0;
  int piece_index = 0;
  UpdateMethod method = UpdateMethod::GenericSolver;
  double kkt_residual = 0.0;
  bool tie_break_applied = false;
  std::vector<PieceOutcome> pieces;  // per-piece minimizers (runner-ups)
};

// The inertial update: tie-broken minimizer of the divergence over the set.
// Dispatch: prior-in-set, singleton pieces, closed forms (by piece form,
// Bayesian kinds only), generic solver. Ties within tie_tol are broken by
// lex_less. Throws EmptyInfoSet / SolverFailure.
UpdateResult update(const DivergenceSpec& spec, const Belief& prior,
                    const InfoSet& info, const UpdateOptions& options = {});

// Proportional reallocation onto {pi(E) = alpha} for Bayesian kinds.
// Throws NotBayesianKind for other kinds.
Belief closed_form_alpha_event(const DivergenceSpec& spec, const Belief& prior,
                               const std::vector<int>& event, double alpha);

// Clamp mu(E) into [lo, hi], then the alpha-event closed form; the result is
// independent of the generator.
Belief closed_form_interval(const DivergenceSpec& spec, const Belief& prior,
                            const std::vector<int>& event, double lo,
                            double hi);

// Proportional masses alpha1 on E1, alpha2 on E2, remainder on the
// complement. Events must be disjoint; throws InfeasibleAlphas.
Belief closed_form_disjoint_alpha_pair(const DivergenceSpec& spec,
                                       const Belief& prior,
                                       const std::vector<int>& event1,
                                       double alpha1,
                                       const std::vector<int>& event2,
                                       double alpha2);

struct PieceSolution {
  Belief x;
  double kkt_residual = 0.0;  // Frank-Wolfe duality gap at the returned point
  int iterations = 0;
};

// Minimizes the divergence over one convex piece: away-step Frank-Wolfe with
// an LP linear-minimization oracle, warm-started at the Euclidean projection
// of the prior, followed by a Newton polish on the identified active face.
// Coordinates pinned to zero by the piece are eliminated up front (the KL
// gradient diverges at zero).
PieceSolution solve_piece(const DivergenceSpec& spec, const Belief& prior,
                          const ConvexPiece& piece, double tol = 1e-9,
                          int max_iter = 50000);

// Test oracle: global scan of grid(n, k) filtered by constraint slack
// (<= 1.5/k), plus the exact points of point-form pieces, refined by six
// halvings of a local pattern search. Requires n <= 4, k <= 400.
Belief brute_force_oracle(const DivergenceSpec& spec, const Belief& prior,
                          const InfoSet& info, int k);

}  // namespace inertia
