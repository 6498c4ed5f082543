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

#include "inertia/divergence.hpp"
#include "inertia/infoset.hpp"
#include "inertia/updater.hpp"

namespace inertia {

struct PropertyViolation {
  std::string instance;  // human-readable instance description
  double expected = 0.0;
  double got = 0.0;
  double deviation = 0.0;
};

struct PropertyReport {
  std::string property;
  std::uint64_t seed = 0;
  int trials = 0;
  int tested = 0;
  int skipped = 0;
  std::vector<PropertyViolation> violations;
  std::vector<std::string> notes;
  bool pass() const { return violations.empty(); }
};

// Proportional-reallocation check on random alpha-events, run through the
// generic solver (closed forms disabled) so the divergence itself is what is
// being tested. Also verifies the within-event likelihood-ratio condition
// mu_I(s)/mu_I(E) = mu(s)/mu(E).
PropertyReport check_extended_bayes(const DivergenceSpec& spec,
                                    const Belief& prior, int trials,
                                    std::uint64_t seed = 0);

// Invariance of informational preference between intersected alpha-event
// pairs under a common scale. Both sides of a comparison carry the same
// total event mass so the off-events block cancels and the comparison
// isolates the within-events allocation; half the trials are engineered
// near-ties, which is where non-power generators break.
PropertyReport check_scale_invariance(const DivergenceSpec& spec,
                                      const Belief& prior, int trials,
                                      std::uint64_t seed = 0);

// Qualitative information A >= B with mu(A) < mu(B): posterior must keep all
// states outside A u B unchanged and split (mu(A)+mu(B))/2 on each side,
// proportionally within blocks. Exactly the KL pattern; other generators
// produce recorded violations.
PropertyReport check_iie(const DivergenceSpec& spec, const Belief& prior,
                         int trials, std::uint64_t seed = 0);

struct DisagreementWitness {
  Belief pi1, pi2;
  Belief chosen_a, chosen_b;
  double d_a_pi1 = 0, d_a_pi2 = 0, d_b_pi1 = 0, d_b_pi2 = 0;
  int instances_tried = 0;
};

// Searches two-point information sets on which the two divergences select
// different posteriors: random pairs first, then pairs engineered to be
// equidistant under the first divergence and nudged into opposite strict
// orderings.
std::optional<DisagreementWitness> find_disagreement(
    const DivergenceSpec& spec_a, const DivergenceSpec& spec_b,
    const Belief& prior, int budget = 10000, std::uint64_t seed = 0);

// Comparative statics between a generator and its concave transform on
// I = {pi(AuB)=alpha, pi(AuC)=beta}: records every state where the
// more-concave generator fails to put strictly more mass on the common
// event A (or strictly less on B u C). The transform concavity
// h = sigma2 o sigma1^{-1}, h'' < 0, is verified by sampling first.
PropertyReport check_comparative_statics(const DivergenceSpec& spec1,
                                         const DivergenceSpec& spec2,
                                         const Belief& prior, int trials,
                                         std::uint64_t seed = 0);

// Pure-exchange economy with sqrt utility for both traders.
struct ExchangeEconomy {
  Belief prior;
  std::vector<double> endowment_a;
  std::vector<double> endowment_b;
  DivergenceSpec divergence_a = DivergenceSpec::kl();
  DivergenceSpec divergence_b = DivergenceSpec::kl();
};

struct TradeResult {
  Belief posterior_a, posterior_b;
  std::vector<double> allocation_a, allocation_b;
  double eu_a_before = 0, eu_b_before = 0;
  double eu_a_after = 0, eu_b_after = 0;
};

double expected_sqrt_utility(const Belief& belief,
                             const std::vector<double>& consumption);

// Updates both traders on the public information; with common posteriors
// returns nothing, otherwise grid-searches state-contingent transfers
// (step defaults to 0.05) for a Pareto improvement over the endowment.
std::optional<TradeResult> detect_speculative_trade(
    const ExchangeEconomy& economy, const InfoSet& info, double step = 0.05,
    double max_transfer = 2.5);

}  // namespace inertia
