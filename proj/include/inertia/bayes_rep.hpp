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
#include <string>
#include <vector>

#include "inertia/simplex.hpp"

namespace inertia {

// One message of an updating rule: an opaque identifier, the posterior the
// rule assigns to it, and (for event messages) the event it certifies.
struct RuleMessage {
  std::string id;
  std::optional<std::vector<int>> event;  // set for event messages I_E
  Belief posterior;
};

// A finite updating rule: prior plus posteriors per message. Must contain an
// event message for every proper nonempty subset of states, and more
// messages than states overall.
struct UpdatingRule {
  Belief prior;
  std::vector<RuleMessage> messages;
};

struct ResponsivenessViolation {
  std::string message_id;
  int state = 0;
  double posterior_value = 0.0;
  double prior_value = 0.0;
  bool inside_event = false;  // failed the >= clause (else the < clause)
};

struct ResponsivenessReport {
  std::vector<ResponsivenessViolation> violations;
  int events_checked = 0;
  bool pass() const { return violations.empty(); }
};

// Verifies rho(I_E)(s) >= mu(s) on E and < mu(s) off E, for every proper
// nonempty event E. Throws MissingEventMessage if some event has no message.
ResponsivenessReport check_minimal_responsiveness(const UpdatingRule& rule);

// Conditional signal distribution P(message | state) with mixing weights
// lambda; Bayes posteriors of P reproduce the rule.
struct SignalStructure {
  std::vector<std::string> message_ids;
  std::vector<double> lambda;               // one per message, > 0
  std::vector<std::vector<double>> p;       // states x messages, rows sum to 1
};

// Solves mu(s) = sum_I lambda(I) rho(I)(s) for strictly positive lambda by
// maximizing min_I lambda(I) (LP), then emits P(I|s) = lambda(I) rho(I)(s) /
// mu(s). Throws NoPositiveSolution when min lambda < 1e-9.
SignalStructure construct(const UpdatingRule& rule);

// Bayes posterior of the structure on one message, for round-trip checks.
Belief bayes_posterior(const SignalStructure& s, const Belief& prior,
                       int message_index);

}  // namespace inertia
