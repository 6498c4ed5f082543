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

#include <json.hpp>

#include "inertia/analysis.hpp"
#include "inertia/bayes_rep.hpp"
#include "inertia/divergence.hpp"
#include "inertia/infoset.hpp"
#include "inertia/narratives.hpp"
#include "inertia/updater.hpp"

namespace inertia {

using Json = nlohmann::ordered_json;

// All emitted numbers are rounded to 12 significant digits so output bytes
// are stable across runs; infinities become the strings "inf"/"-inf".
double round12(double x);
Json number12(double x);

Json belief_to_json(const Belief& b);
Belief belief_from_json(const Json& j);

// {"labels": [...], "values": [...]} with values optional.
StateSpace state_space_from_json(const Json& j);
Json state_space_to_json(const StateSpace& s);

// {"kind":"kl"} | {"kind":"alpha","alpha":a} | {"kind":"euclidean"} |
// {"kind":"h_bayesian","rho":r,"psi":[...]} — or the CLI shorthand strings
// "kl", "euclidean", "alpha:0.5", "h_bayesian:0.7:1,1,1".
DivergenceSpec divergence_from_json(const Json& j);
DivergenceSpec divergence_from_string(const std::string& text);

// Info sets reference states by index or by label; labels resolve against an
// optional top-level "labels" array or a caller-provided state space.
InfoSet infoset_from_json(const Json& j, int n,
                          const std::optional<StateSpace>& states = {});

Json update_result_to_json(const UpdateResult& r, bool trace = false);

UpdatingRule rule_from_json(const Json& j);
Json signal_structure_to_json(const SignalStructure& s);

ExchangeEconomy economy_from_json(const Json& j);
Json infoset_field_from_economy(const Json& j, int n);  // parses j["infoset"]
Json trade_result_to_json(const std::optional<TradeResult>& t);

GameSpec game_from_json(const Json& j);
Json assumption1_to_json(const Assumption1Report& rep);
Json equilibrium_to_json(const EquilibriumResult& eq);
Json best_response_to_json(const BestResponseReport& rep);

Json property_report_to_json(const PropertyReport& rep);
Json disagreement_to_json(const std::optional<DisagreementWitness>& w);

Json error_to_json(const Error& e);

std::string read_text_file(const std::string& path);
Json load_json_arg(const std::string& inline_or_path);

}  // namespace inertia
