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

#include "inertia/bayes_rep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "inertia/linprog.hpp"

namespace inertia {

namespace {

// Canonical key for an event (sorted state indices).
std::vector<int> sorted_event(std::vector<int> e) {
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

ResponsivenessReport check_minimal_responsiveness(const UpdatingRule& rule) {
  const int n = rule.prior.size();
  std::set<std::vector<int>> present;
  for (const auto& msg : rule.messages) {
    if (msg.event) present.insert(sorted_event(*msg.event));
  }
  // every proper nonempty subset of states must have an event message
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::vector<int> event;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) event.push_back(i);
    }
    if (!present.count(event)) {
      std::string desc;
      for (int s : event) desc += (desc.empty() ? "" : ",") + std::to_string(s);
      throw Error(ErrorCode::MissingEventMessage,
                  "no message for event {" + desc + "}");
    }
  }

  ResponsivenessReport report;
  for (const auto& msg : rule.messages) {
    if (!msg.event) continue;
    if (static_cast<int>(msg.event->size()) >= n) continue;
    ++report.events_checked;
    std::vector<bool> inside(n, false);
    for (int s : *msg.event) inside[s] = true;
    for (int s = 0; s < n; ++s) {
      const double post = msg.posterior[s];
      const double pri = rule.prior[s];
      if (inside[s] ? !(post >= pri) : !(post < pri)) {
        report.violations.push_back({msg.id, s, post, pri, inside[s]});
      }
    }
  }
  return report;
}

SignalStructure construct(const UpdatingRule& rule) {
  const int n = rule.prior.size();
  const int m = static_cast<int>(rule.messages.size());
  if (m <= n) {
    throw Error(ErrorCode::BadInput,
                "need more messages than states for the linear system");
  }
  // Variables: lambda_1..lambda_m, t. Maximize t subject to
  //   sum_I lambda_I rho_I(s) = mu(s) for every s, and lambda_I - t >= 0.
  std::vector<double> c(m + 1, 0.0);
  c[m] = -1.0;  // min -t
  std::vector<LpConstraint> cons;
  for (int s = 0; s < n; ++s) {
    LpConstraint eq;
    eq.rel = LpRelation::Eq;
    eq.b = rule.prior[s];
    eq.a.assign(m + 1, 0.0);
    for (int j = 0; j < m; ++j) eq.a[j] = rule.messages[j].posterior[s];
    cons.push_back(std::move(eq));
  }
  for (int j = 0; j < m; ++j) {
    LpConstraint ge;
    ge.rel = LpRelation::GreaterEq;
    ge.b = 0.0;
    ge.a.assign(m + 1, 0.0);
    ge.a[j] = 1.0;
    ge.a[m] = -1.0;
    cons.push_back(std::move(ge));
  }
  const LpResult lp = solve_lp(c, cons);
  if (lp.status != LpStatus::Optimal || -lp.objective < 1e-9) {
    throw Error(ErrorCode::NoPositiveSolution,
                "no strictly positive mixing weights solve the system");
  }

  SignalStructure out;
  out.message_ids.reserve(m);
  out.lambda.assign(m, 0.0);
  out.p.assign(n, std::vector<double>(m, 0.0));
  for (int j = 0; j < m; ++j) {
    out.message_ids.push_back(rule.messages[j].id);
    out.lambda[j] = lp.x[j];
    for (int s = 0; s < n; ++s) {
      out.p[s][j] = lp.x[j] * rule.messages[j].posterior[s] / rule.prior[s];
    }
  }
  return out;
}

Belief bayes_posterior(const SignalStructure& s, const Belief& prior,
                       int message_index) {
  const int n = prior.size();
  double denom = 0.0;
  for (int st = 0; st < n; ++st) denom += s.p[st][message_index] * prior[st];
  if (denom <= 0.0) {
    throw Error(ErrorCode::BadInput, "message has zero marginal probability");
  }
  std::vector<double> w(n);
  for (int st = 0; st < n; ++st) {
    w[st] = s.p[st][message_index] * prior[st] / denom;
  }
  return validate(w);
}

}  // namespace inertia
