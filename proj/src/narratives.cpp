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

#include "inertia/narratives.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "inertia/divergence.hpp"
#include "inertia/infoset.hpp"
#include "inertia/updater.hpp"

namespace inertia {

namespace {

double expected_value(const Belief& p, const std::vector<double>& values) {
  double e = 0.0;
  for (int i = 0; i < p.size(); ++i) e += p[i] * values[i];
  return e;
}

double quadratic_cost(const Belief& claim, const Belief& truth, double c) {
  double q = 0.0;
  for (int i = 0; i < claim.size(); ++i) {
    const double d = claim[i] - truth[i];
    q += d * d;
  }
  return c * q;
}

// Receiver: KL-closest claim, lexicographic tie-break.
Belief receiver_selection(const GameSpec& game, const Belief& claim1,
                          const Belief& claim2) {
  const DivergenceSpec kl = DivergenceSpec::kl();
  return update(kl, game.mu, finite_set({claim1, claim2})).posterior;
}

}  // namespace

void validate_game(const GameSpec& game) {
  const int n = static_cast<int>(game.state_values.size());
  if (n < 2) throw Error(ErrorCode::BadInput, "game needs at least 2 states");
  if (game.mu.size() != n || game.nu.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "belief dimensions differ from state count");
  }
  std::set<double> distinct(game.state_values.begin(), game.state_values.end());
  if (static_cast<int>(distinct.size()) != n) {
    throw Error(ErrorCode::BadInput, "state values must be distinct");
  }
  for (double s : game.state_values) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw Error(ErrorCode::BadInput, "state values must lie in [0,1]");
    }
  }
  if (!game.mu.full_support() || !game.nu.full_support()) {
    throw Error(ErrorCode::PriorNotFullSupport,
                "mu and nu must have full support");
  }
  if (linf_distance(game.mu, game.nu) < 1e-12) {
    throw Error(ErrorCode::BadInput, "the truth must differ from the prior");
  }
  if (!(game.c1 > 0.0 && game.c2 > 0.0)) {
    throw Error(ErrorCode::BadInput, "costs must be positive");
  }
}

Assumption1Report check_assumption1(const GameSpec& game) {
  validate_game(game);
  const int n = static_cast<int>(game.state_values.size());
  Assumption1Report rep;
  double mean = 0.0;
  for (double s : game.state_values) mean += s;
  mean /= n;
  rep.state_mean = mean;

  double d = 0.0, ratio_num = 0.0, max_clause = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = (game.state_values[i] - mean) / game.nu[i];
    d += game.mu[i] * z;
    ratio_num += game.mu[i] * z * z;
    max_clause = std::max(max_clause, std::abs(game.state_values[i] - mean) /
                                          game.nu[i]);
  }
  rep.d_value = d;
  rep.d_nonzero = std::abs(d) > 1e-12;
  rep.clause_ratio = rep.d_nonzero ? ratio_num / (2.0 * std::abs(d)) : 0.0;
  rep.clause_max = max_clause;
  rep.bound = std::max(rep.clause_ratio, rep.clause_max);
  rep.min_cost = std::min(game.c1, game.c2);
  rep.cost_ok = rep.d_nonzero && rep.min_cost > rep.bound;
  rep.pass = rep.d_nonzero && rep.cost_ok;
  return rep;
}

EquilibriumResult equilibrium(const GameSpec& game, bool force) {
  EquilibriumResult res;
  res.assumption = check_assumption1(game);
  if (!res.assumption.d_nonzero) {
    throw Error(ErrorCode::AssumptionViolated,
                "E_mu[(s - mean)/nu_s] = 0: no sender is favored");
  }
  if (!res.assumption.pass && !force) {
    throw Error(ErrorCode::AssumptionViolated,
                "cost bound fails; pass force to compute the closed form anyway");
  }

  const int n = static_cast<int>(game.state_values.size());
  const double mean = res.assumption.state_mean;
  const int i = res.assumption.d_value > 0.0 ? 1 : 2;
  res.distorting_sender = i;
  const double sign = (i == 1) ? 1.0 : -1.0;
  const double cost = (i == 1) ? game.c1 : game.c2;

  std::vector<double> distorted(n);
  for (int s = 0; s < n; ++s) {
    distorted[s] = game.nu[s] + sign * (game.state_values[s] - mean) /
                                    (2.0 * cost);
    if (distorted[s] < -1e-12 || distorted[s] > 1.0 + 1e-12) {
      throw Error(ErrorCode::NegativeClaim,
                  "closed-form claim exits the simplex at state " +
                      std::to_string(s) + " (value " +
                      std::to_string(distorted[s]) + ")");
    }
  }
  const Belief claim_i = validate(distorted);
  res.claim1 = (i == 1) ? claim_i : game.nu;
  res.claim2 = (i == 2) ? claim_i : game.nu;

  res.receiver_posterior = receiver_selection(game, res.claim1, res.claim2);
  res.receiver_selects_distortion =
      linf_distance(res.receiver_posterior, claim_i) < 1e-10;
  res.action = expected_value(res.receiver_posterior, game.state_values);

  res.kl_margin = 0.0;
  for (int s = 0; s < n; ++s) {
    res.kl_margin += game.mu[s] * std::log(claim_i[s] / game.nu[s]);
  }

  res.payoff1 = res.action - quadratic_cost(res.claim1, game.nu, game.c1);
  res.payoff2 =
      (1.0 - res.action) - quadratic_cost(res.claim2, game.nu, game.c2);

  if (game.reference) {
    res.reference.checked = true;
    const ReferenceValues& ref = *game.reference;
    if (ref.expected_claim) {
      if (static_cast<int>(ref.expected_claim->size()) != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "reference claim length differs from state count");
      }
      double dev = 0.0;
      for (int s = 0; s < n; ++s) {
        dev = std::max(dev, std::abs((*ref.expected_claim)[s] - claim_i[s]));
      }
      res.reference.max_claim_deviation = dev;
      res.reference.claim_matches = dev <= ref.tol;
    }
    if (ref.expected_action) {
      res.reference.action_deviation = std::abs(*ref.expected_action - res.action);
      res.reference.action_matches = res.reference.action_deviation <= ref.tol;
    }
  }
  return res;
}

double sender_payoff(const GameSpec& game, int sender, const Belief& claim_own,
                     const Belief& claim_other) {
  const Belief selected = (sender == 1)
                              ? receiver_selection(game, claim_own, claim_other)
                              : receiver_selection(game, claim_other, claim_own);
  const double action = expected_value(selected, game.state_values);
  const double base = (sender == 1) ? action : 1.0 - action;
  const double c = (sender == 1) ? game.c1 : game.c2;
  return base - quadratic_cost(claim_own, game.nu, c);
}

BestResponseReport best_response_check(const GameSpec& game,
                                       const EquilibriumResult& eq,
                                       double grid_step, double tol,
                                       std::uint64_t seed) {
  validate_game(game);
  const int n = static_cast<int>(game.state_values.size());
  BestResponseReport rep;
  rep.grid_step = grid_step;
  rep.tol = tol;
  rep.seed = seed;

  std::vector<Belief> deviations;
  if (n == 3) {
    const int k = std::max(1, static_cast<int>(std::lround(1.0 / grid_step)));
    deviations = grid(3, k);
  } else {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> exp_dist(1.0);
    for (int t = 0; t < 5000; ++t) {
      std::vector<double> w(n);
      double sum = 0.0;
      for (double& x : w) {
        x = exp_dist(rng) + 1e-6;
        sum += x;
      }
      for (double& x : w) x /= sum;
      deviations.push_back(validate(w));
    }
  }
  deviations.push_back(game.nu);
  deviations.push_back(eq.claim1);
  deviations.push_back(eq.claim2);

  const double v1_eq = sender_payoff(game, 1, eq.claim1, eq.claim2);
  const double v2_eq = sender_payoff(game, 2, eq.claim2, eq.claim1);

  for (const Belief& dev : deviations) {
    const double v1 = sender_payoff(game, 1, dev, eq.claim2);
    ++rep.deviations_tested_1;
    if (v1 - v1_eq > rep.max_gain_1) {
      rep.max_gain_1 = v1 - v1_eq;
      if (rep.max_gain_1 > tol) {
        rep.best_improvement = DeviationRecord{1, dev, v1, v1_eq, v1 - v1_eq};
      }
    }
    const double v2 = sender_payoff(game, 2, dev, eq.claim1);
    ++rep.deviations_tested_2;
    if (v2 - v2_eq > rep.max_gain_2) {
      rep.max_gain_2 = v2 - v2_eq;
      if (rep.max_gain_2 > tol) {
        rep.best_improvement = DeviationRecord{2, dev, v2, v2_eq, v2 - v2_eq};
      }
    }
  }
  rep.pass = rep.max_gain_1 <= tol && rep.max_gain_2 <= tol;
  return rep;
}

}  // namespace inertia
