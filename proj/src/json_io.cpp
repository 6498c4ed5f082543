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

#include "inertia/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace inertia {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json number12(double x) {
  if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
  if (std::isnan(x)) return Json("nan");
  return Json(round12(x));
}

Json belief_to_json(const Belief& b) {
  Json arr = Json::array();
  for (int i = 0; i < b.size(); ++i) arr.push_back(number12(b[i]));
  return arr;
}

Belief belief_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::BadInput, "belief must be a JSON array of numbers");
  }
  std::vector<double> w;
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw Error(ErrorCode::BadInput, "belief entries must be numbers");
    }
    w.push_back(v.get<double>());
  }
  return validate(w);
}

StateSpace state_space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labels")) {
    throw Error(ErrorCode::BadInput, "state space needs a \"labels\" array");
  }
  std::optional<std::vector<double>> values;
  if (j.contains("values")) {
    values = j.at("values").get<std::vector<double>>();
  }
  return StateSpace(j.at("labels").get<std::vector<std::string>>(),
                    std::move(values));
}

Json state_space_to_json(const StateSpace& s) {
  Json out;
  out["labels"] = s.labels();
  if (s.has_values()) {
    Json vals = Json::array();
    for (double v : s.values()) vals.push_back(number12(v));
    out["values"] = vals;
  }
  return out;
}

DivergenceSpec divergence_from_json(const Json& j) {
  if (j.is_string()) return divergence_from_string(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) {
    throw Error(ErrorCode::BadInput, "divergence spec needs a \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "kl") return DivergenceSpec::kl();
  if (kind == "euclidean") return DivergenceSpec::euclidean();
  if (kind == "alpha") {
    return DivergenceSpec::alpha(j.at("alpha").get<double>());
  }
  if (kind == "h_bayesian") {
    return DivergenceSpec::h_bayesian_power(
        j.at("rho").get<double>(), j.at("psi").get<std::vector<double>>());
  }
  throw Error(ErrorCode::BadInput, "unknown divergence kind '" + kind + "'");
}

DivergenceSpec divergence_from_string(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    return divergence_from_json(Json::parse(text));
  }
  if (text == "kl") return DivergenceSpec::kl();
  if (text == "euclidean") return DivergenceSpec::euclidean();
  if (text.rfind("alpha:", 0) == 0) {
    return DivergenceSpec::alpha(std::strtod(text.c_str() + 6, nullptr));
  }
  if (text.rfind("h_bayesian:", 0) == 0) {
    const std::string rest = text.substr(11);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::BadInput,
                  "h_bayesian shorthand is h_bayesian:<rho>:<psi,psi,...>");
    }
    const double rho = std::strtod(rest.substr(0, colon).c_str(), nullptr);
    std::vector<double> psi;
    std::stringstream ss(rest.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      psi.push_back(std::strtod(tok.c_str(), nullptr));
    }
    return DivergenceSpec::h_bayesian_power(rho, psi);
  }
  throw Error(ErrorCode::BadInput, "unknown divergence '" + text + "'");
}

namespace {

std::vector<int> event_from_json(const Json& j, int n,
                                 const std::optional<StateSpace>& states) {
  if (!j.is_array()) {
    throw Error(ErrorCode::BadInput, "event must be an array");
  }
  std::vector<int> event;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      event.push_back(v.get<int>());
    } else if (v.is_string()) {
      if (!states) {
        throw Error(ErrorCode::BadInput,
                    "event uses labels but no state labels are available");
      }
      event.push_back(states->index_of(v.get<std::string>()));
    } else {
      throw Error(ErrorCode::BadInput, "event entries are indices or labels");
    }
  }
  (void)n;
  return event;
}

InfoSet infoset_from_json_inner(const Json& j, int n,
                                const std::optional<StateSpace>& states) {
  if (!j.is_object() || !j.contains("type")) {
    throw Error(ErrorCode::BadInput, "info set needs a \"type\"");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "alpha_event") {
    return alpha_event(n, event_from_json(j.at("event"), n, states),
                       j.at("alpha").get<double>());
  }
  if (type == "interval") {
    return interval(n, event_from_json(j.at("event"), n, states),
                    j.at("lo").get<double>(), j.at("hi").get<double>());
  }
  if (type == "qualitative") {
    return qualitative(n, event_from_json(j.at("a"), n, states),
                       event_from_json(j.at("b"), n, states),
                       j.at("gamma").get<double>());
  }
  if (type == "precise") {
    return precise(belief_from_json(j.at("point")));
  }
  if (type == "finite") {
    std::vector<Belief> points;
    for (const auto& p : j.at("points")) points.push_back(belief_from_json(p));
    return finite_set(points);
  }
  if (type == "union" || type == "intersect") {
    std::vector<InfoSet> parts;
    for (const auto& part : j.at("of")) {
      parts.push_back(infoset_from_json_inner(part, n, states));
    }
    return type == "union" ? union_of(parts) : intersect(parts);
  }
  throw Error(ErrorCode::BadInput, "unknown info set type '" + type + "'");
}

}  // namespace

InfoSet infoset_from_json(const Json& j, int n,
                          const std::optional<StateSpace>& states) {
  std::optional<StateSpace> resolved = states;
  if (j.is_object() && j.contains("labels")) {
    resolved = StateSpace(j.at("labels").get<std::vector<std::string>>());
  }
  return infoset_from_json_inner(j, n, resolved);
}

Json update_result_to_json(const UpdateResult& r, bool trace) {
  Json out;
  out["posterior"] = belief_to_json(r.posterior);
  out["objective"] = number12(r.objective);
  out["method"] = update_method_name(r.method);
  out["piece_index"] = r.piece_index;
  out["kkt_residual"] = number12(r.kkt_residual);
  out["tie_break_applied"] = r.tie_break_applied;
  Json objs = Json::array();
  for (const auto& p : r.pieces) {
    objs.push_back(p.empty ? Json("empty") : number12(p.objective));
  }
  out["piece_objectives"] = objs;
  if (trace) {
    Json pieces = Json::array();
    for (const auto& p : r.pieces) {
      Json pj;
      pj["index"] = p.index;
      if (p.empty) {
        pj["empty"] = true;
      } else {
        pj["method"] = update_method_name(p.method);
        pj["objective"] = number12(p.objective);
        pj["posterior"] = belief_to_json(p.posterior);
        pj["kkt_residual"] = number12(p.kkt_residual);
      }
      pieces.push_back(pj);
    }
    out["trace"] = Json{{"pieces", pieces}};
  }
  return out;
}

UpdatingRule rule_from_json(const Json& j) {
  UpdatingRule rule;
  rule.prior = belief_from_json(j.at("prior"));
  std::optional<StateSpace> states;
  if (j.contains("labels")) {
    states = StateSpace(j.at("labels").get<std::vector<std::string>>());
  }
  for (const auto& m : j.at("messages")) {
    RuleMessage msg;
    msg.id = m.at("id").get<std::string>();
    if (m.contains("event")) {
      msg.event = event_from_json(m.at("event"), rule.prior.size(), states);
    }
    msg.posterior = belief_from_json(m.at("posterior"));
    rule.messages.push_back(std::move(msg));
  }
  return rule;
}

Json signal_structure_to_json(const SignalStructure& s) {
  Json out;
  out["message_ids"] = s.message_ids;
  Json lam = Json::array();
  for (double l : s.lambda) lam.push_back(number12(l));
  out["lambda"] = lam;
  Json p = Json::array();
  for (const auto& row : s.p) {
    Json r = Json::array();
    for (double v : row) r.push_back(number12(v));
    p.push_back(r);
  }
  out["p"] = p;
  return out;
}

ExchangeEconomy economy_from_json(const Json& j) {
  ExchangeEconomy eco;
  eco.prior = belief_from_json(j.at("prior"));
  eco.endowment_a = j.at("endowment_a").get<std::vector<double>>();
  eco.endowment_b = j.at("endowment_b").get<std::vector<double>>();
  eco.divergence_a = divergence_from_json(j.at("divergence_a"));
  eco.divergence_b = divergence_from_json(j.at("divergence_b"));
  return eco;
}

Json trade_result_to_json(const std::optional<TradeResult>& t) {
  Json out;
  if (!t) {
    out["trade"] = false;
    return out;
  }
  out["trade"] = true;
  out["posterior_a"] = belief_to_json(t->posterior_a);
  out["posterior_b"] = belief_to_json(t->posterior_b);
  Json fa = Json::array(), fb = Json::array();
  for (double v : t->allocation_a) fa.push_back(number12(v));
  for (double v : t->allocation_b) fb.push_back(number12(v));
  out["allocation_a"] = fa;
  out["allocation_b"] = fb;
  out["eu_a_before"] = number12(t->eu_a_before);
  out["eu_a_after"] = number12(t->eu_a_after);
  out["eu_b_before"] = number12(t->eu_b_before);
  out["eu_b_after"] = number12(t->eu_b_after);
  return out;
}

GameSpec game_from_json(const Json& j) {
  GameSpec game;
  game.state_values = j.at("values").get<std::vector<double>>();
  if (j.contains("labels")) {
    // labels are cosmetic for the game, but must be consistent
    const StateSpace s(j.at("labels").get<std::vector<std::string>>(),
                       game.state_values);
    (void)s;
  }
  game.mu = belief_from_json(j.at("mu"));
  game.nu = belief_from_json(j.at("nu"));
  game.c1 = j.at("c1").get<double>();
  game.c2 = j.at("c2").get<double>();
  if (j.contains("reference")) {
    ReferenceValues ref;
    const Json& r = j.at("reference");
    if (r.contains("expected_claim")) {
      ref.expected_claim = r.at("expected_claim").get<std::vector<double>>();
    }
    if (r.contains("expected_action")) {
      ref.expected_action = r.at("expected_action").get<double>();
    }
    if (r.contains("tol")) ref.tol = r.at("tol").get<double>();
    game.reference = std::move(ref);
  }
  validate_game(game);
  return game;
}

Json assumption1_to_json(const Assumption1Report& rep) {
  Json out;
  out["state_mean"] = number12(rep.state_mean);
  out["d_value"] = number12(rep.d_value);
  out["clause_ratio"] = number12(rep.clause_ratio);
  out["clause_max"] = number12(rep.clause_max);
  out["bound"] = number12(rep.bound);
  out["min_cost"] = number12(rep.min_cost);
  out["d_nonzero"] = rep.d_nonzero;
  out["cost_ok"] = rep.cost_ok;
  out["pass"] = rep.pass;
  return out;
}

Json equilibrium_to_json(const EquilibriumResult& eq) {
  Json out;
  out["distorting_sender"] = eq.distorting_sender;
  out["claim1"] = belief_to_json(eq.claim1);
  out["claim2"] = belief_to_json(eq.claim2);
  out["receiver_posterior"] = belief_to_json(eq.receiver_posterior);
  out["action"] = number12(eq.action);
  out["payoff1"] = number12(eq.payoff1);
  out["payoff2"] = number12(eq.payoff2);
  out["kl_margin"] = number12(eq.kl_margin);
  out["receiver_selects_distortion"] = eq.receiver_selects_distortion;
  out["assumption1"] = assumption1_to_json(eq.assumption);
  if (eq.reference.checked) {
    Json ref;
    ref["claim_matches"] = eq.reference.claim_matches;
    ref["action_matches"] = eq.reference.action_matches;
    ref["max_claim_deviation"] = number12(eq.reference.max_claim_deviation);
    ref["action_deviation"] = number12(eq.reference.action_deviation);
    ref["mismatch"] =
        !(eq.reference.claim_matches && eq.reference.action_matches);
    out["reference_check"] = ref;
  }
  return out;
}

Json best_response_to_json(const BestResponseReport& rep) {
  Json out;
  out["grid_step"] = number12(rep.grid_step);
  out["seed"] = rep.seed;
  out["deviations_tested_1"] = rep.deviations_tested_1;
  out["deviations_tested_2"] = rep.deviations_tested_2;
  out["max_gain_1"] = number12(rep.max_gain_1);
  out["max_gain_2"] = number12(rep.max_gain_2);
  out["tol"] = number12(rep.tol);
  out["pass"] = rep.pass;
  if (rep.best_improvement) {
    Json dev;
    dev["sender"] = rep.best_improvement->sender;
    dev["claim"] = belief_to_json(rep.best_improvement->claim);
    dev["payoff"] = number12(rep.best_improvement->payoff);
    dev["equilibrium_payoff"] =
        number12(rep.best_improvement->equilibrium_payoff);
    dev["gain"] = number12(rep.best_improvement->gain);
    out["best_improvement"] = dev;
  }
  return out;
}

Json property_report_to_json(const PropertyReport& rep) {
  Json out;
  out["property"] = rep.property;
  out["seed"] = rep.seed;
  out["trials"] = rep.trials;
  out["tested"] = rep.tested;
  out["skipped"] = rep.skipped;
  out["pass"] = rep.pass();
  Json viols = Json::array();
  for (const auto& v : rep.violations) {
    Json vj;
    vj["instance"] = v.instance;
    vj["expected"] = number12(v.expected);
    vj["got"] = number12(v.got);
    vj["deviation"] = number12(v.deviation);
    viols.push_back(vj);
  }
  out["violations"] = viols;
  out["notes"] = rep.notes;
  return out;
}

Json disagreement_to_json(const std::optional<DisagreementWitness>& w) {
  Json out;
  if (!w) {
    out["found"] = false;
    return out;
  }
  out["found"] = true;
  out["pi1"] = belief_to_json(w->pi1);
  out["pi2"] = belief_to_json(w->pi2);
  out["chosen_a"] = belief_to_json(w->chosen_a);
  out["chosen_b"] = belief_to_json(w->chosen_b);
  out["d_a"] = Json::array({number12(w->d_a_pi1), number12(w->d_a_pi2)});
  out["d_b"] = Json::array({number12(w->d_b_pi1), number12(w->d_b_pi2)});
  out["instances_tried"] = w->instances_tried;
  return out;
}

Json error_to_json(const Error& e) {
  Json out;
  out["error"] = error_code_name(e.code());
  out["message"] = e.what();
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::BadInput, "cannot open file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json_arg(const std::string& inline_or_path) {
  const auto first = inline_or_path.find_first_not_of(" \t\n");
  if (first != std::string::npos &&
      (inline_or_path[first] == '[' || inline_or_path[first] == '{')) {
    return Json::parse(inline_or_path);
  }
  return Json::parse(read_text_file(inline_or_path));
}

}  // namespace inertia
