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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inertia/simplex.hpp"

namespace inertia {

// Optional published values to compare the computed equilibrium against;
// mismatches are reported, never adopted.
struct ReferenceValues {
  std::optional<std::vector<double>> expected_claim;
  std::optional<double> expected_action;
  double tol = 1e-6;
};

// Two senders with opposing linear payoffs and quadratic reputational costs
// persuade a KL receiver; sender 1 prefers high actions, sender 2 low ones.
struct GameSpec {
  std::vector<double> state_values;  // distinct, in [0,1]
  Belief mu;                         // receiver prior
  Belief nu;                         // the truth
  double c1 = 1.0, c2 = 1.0;
  std::optional<ReferenceValues> reference;
};

void validate_game(const GameSpec& game);

struct Assumption1Report {
  double state_mean = 0.0;    // unweighted mean of the state values
  double d_value = 0.0;       // E_mu[(s - mean)/nu_s]
  double clause_ratio = 0.0;  // E_mu[((s-mean)/nu_s)^2] / (2|D|)
  double clause_max = 0.0;    // max_s |s-mean| / nu_s
  double bound = 0.0;
  double min_cost = 0.0;
  bool d_nonzero = false;
  bool cost_ok = false;
  bool pass = false;
};

Assumption1Report check_assumption1(const GameSpec& game);

struct ReferenceMismatch {
  bool checked = false;
  bool claim_matches = true;
  bool action_matches = true;
  double max_claim_deviation = 0.0;
  double action_deviation = 0.0;
};

struct EquilibriumResult {
  int distorting_sender = 0;  // 1 or 2
  Belief claim1, claim2;
  Belief receiver_posterior;
  double action = 0.0;
  double payoff1 = 0.0, payoff2 = 0.0;
  double kl_margin = 0.0;  // sum_s mu_s ln(distorted claim / nu), > 0 at eq
  bool receiver_selects_distortion = false;
  Assumption1Report assumption;
  ReferenceMismatch reference;
};

// Closed-form equilibrium: the sender favored by the prior distorts by
// (s - mean)/(2c) toward the receiver's prior, the other reports the truth.
// Throws AssumptionViolated (unless force) and NegativeClaim when the
// closed form exits the simplex.
EquilibriumResult equilibrium(const GameSpec& game, bool force = false);

struct DeviationRecord {
  int sender = 0;
  Belief claim;
  double payoff = 0.0;
  double equilibrium_payoff = 0.0;
  double gain = 0.0;
};

struct BestResponseReport {
  double grid_step = 0.0;
  std::uint64_t seed = 0;
  int deviations_tested_1 = 0, deviations_tested_2 = 0;
  double max_gain_1 = 0.0, max_gain_2 = 0.0;
  std::optional<DeviationRecord> best_improvement;
  double tol = 1e-6;
  bool pass = false;
};

// Grid search (simplex grid for 3 states, random claims otherwise) over
// unilateral deviations, re-running the receiver's selection per deviation.
BestResponseReport best_response_check(const GameSpec& game,
                                       const EquilibriumResult& eq,
                                       double grid_step = 0.02,
                                       double tol = 1e-6,
                                       std::uint64_t seed = 0);

// Sender i's payoff when the claims are (claim_i, claim_j), including the
// receiver's selection; used by the deviation search and tests.
double sender_payoff(const GameSpec& game, int sender, const Belief& claim_own,
                     const Belief& claim_other);

}  // namespace inertia
