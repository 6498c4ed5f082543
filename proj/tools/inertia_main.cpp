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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "inertia/analysis.hpp"
#include "inertia/bayes_rep.hpp"
#include "inertia/json_io.hpp"
#include "inertia/narratives.hpp"
#include "inertia/ternary_svg.hpp"

namespace {

using inertia::Json;

int max_iter_from_env() {
  const char* env = std::getenv("INERTIA_MAX_ITER");
  if (!env) return 50000;
  const int v = std::atoi(env);
  return v > 0 ? v : 50000;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct UpdateArgs {
  std::string divergence = "kl";
  std::string prior;
  std::string infoset;
  std::string plot;
  double tol = 1e-9;
  bool trace = false;
  bool no_closed_forms = false;
};

int run_update(const UpdateArgs& args) {
  const inertia::DivergenceSpec spec =
      inertia::divergence_from_string(args.divergence);
  const inertia::Belief prior =
      inertia::belief_from_json(inertia::load_json_arg(args.prior));
  const inertia::InfoSet info = inertia::infoset_from_json(
      inertia::load_json_arg(args.infoset), prior.size());
  inertia::UpdateOptions opt;
  opt.tol = args.tol;
  opt.max_iter = max_iter_from_env();
  opt.disable_closed_forms = args.no_closed_forms;
  const inertia::UpdateResult result = inertia::update(spec, prior, info, opt);
  emit(inertia::update_result_to_json(result, args.trace));
  if (!args.plot.empty()) {
    inertia::TernaryDiagram diagram;
    diagram.prior = prior;
    diagram.info = &info;
    diagram.points.emplace_back("posterior", result.posterior);
    inertia::render_ternary(diagram, args.plot);
  }
  return 0;
}

struct CheckArgs {
  std::string property;
  std::string divergence = "kl";
  std::string prior;
  int trials = 200;
  std::uint64_t seed = 0;
};

int run_check(const CheckArgs& args) {
  const inertia::Belief prior =
      inertia::belief_from_json(inertia::load_json_arg(args.prior));
  inertia::PropertyReport report;
  if (args.property == "extended_bayes") {
    report = inertia::check_extended_bayes(
        inertia::divergence_from_string(args.divergence), prior, args.trials,
        args.seed);
  } else if (args.property == "scale_invariance") {
    report = inertia::check_scale_invariance(
        inertia::divergence_from_string(args.divergence), prior, args.trials,
        args.seed);
  } else if (args.property == "iie") {
    report = inertia::check_iie(
        inertia::divergence_from_string(args.divergence), prior, args.trials,
        args.seed);
  } else if (args.property == "comparative_statics") {
    // canonical generator pair: sqrt versus its concave transform ln
    const auto sqrt_gen = inertia::DivergenceSpec::f_generator(
        "sqrt", [](double x) { return std::sqrt(x); },
        [](double x) { return 0.5 / std::sqrt(x); },
        [](double x) { return -0.25 * std::pow(x, -1.5); });
    report = inertia::check_comparative_statics(
        sqrt_gen, inertia::DivergenceSpec::kl(), prior, args.trials, args.seed);
  } else {
    throw inertia::Error(inertia::ErrorCode::BadInput,
                         "unknown property '" + args.property + "'");
  }
  emit(inertia::property_report_to_json(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inertial belief updating over general information sets"};
  app.require_subcommand(1);

  UpdateArgs update_args;
  CLI::App* update_cmd =
      app.add_subcommand("update", "posterior for a prior and an info set");
  update_cmd->add_option("--divergence", update_args.divergence,
                         "kl | euclidean | alpha:A | h_bayesian:RHO:PSI,..");
  update_cmd->add_option("--prior", update_args.prior,
                         "belief JSON array or file")->required();
  update_cmd->add_option("--infoset", update_args.infoset,
                         "info set JSON or file")->required();
  update_cmd->add_option("--plot", update_args.plot, "ternary SVG path (n=3)");
  update_cmd->add_option("--tol", update_args.tol, "solver tolerance");
  update_cmd->add_flag("--trace", update_args.trace,
                       "include per-piece objectives");
  update_cmd->add_flag("--no-closed-forms", update_args.no_closed_forms,
                       "force the generic solver");

  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand("check", "property checkers");
  check_cmd
      ->add_option("--property", check_args.property,
                   "extended_bayes | scale_invariance | iie | "
                   "comparative_statics")
      ->required();
  check_cmd->add_option("--divergence", check_args.divergence, "divergence");
  check_cmd->add_option("--prior", check_args.prior, "belief JSON or file")
      ->required();
  check_cmd->add_option("--trials", check_args.trials, "trial count");
  check_cmd->add_option("--seed", check_args.seed, "rng seed");

  std::string dis_a = "kl", dis_b = "alpha:0.5", dis_prior;
  int dis_budget = 10000;
  std::uint64_t dis_seed = 0;
  CLI::App* disagree_cmd =
      app.add_subcommand("disagree", "search for a two-point disagreement");
  disagree_cmd->add_option("--a", dis_a, "first divergence");
  disagree_cmd->add_option("--b", dis_b, "second divergence");
  disagree_cmd->add_option("--prior", dis_prior, "belief JSON or file")
      ->required();
  disagree_cmd->add_option("--budget", dis_budget, "instance budget");
  disagree_cmd->add_option("--seed", dis_seed, "rng seed");

  std::string rep_rule, rep_out;
  CLI::App* represent_cmd = app.add_subcommand(
      "represent", "signal structure reproducing an updating rule");
  represent_cmd->add_option("rule", rep_rule, "rule JSON file")->required();
  represent_cmd->add_option("--out", rep_out, "output path (default stdout)");

  std::string trade_file;
  double trade_step = 0.05;
  CLI::App* trade_cmd =
      app.add_subcommand("trade", "speculative-trade detector");
  trade_cmd->add_option("economy", trade_file, "economy JSON file")->required();
  trade_cmd->add_option("--step", trade_step, "transfer grid step");

  std::string narrate_file, narrate_plot;
  bool narrate_force = false, narrate_verify = false;
  double narrate_step = 0.02;
  CLI::App* narrate_cmd =
      app.add_subcommand("narrate", "competing-narratives equilibrium");
  narrate_cmd->add_option("game", narrate_file, "game JSON file")->required();
  narrate_cmd->add_flag("--force", narrate_force,
                        "compute even if the cost bound fails");
  narrate_cmd->add_flag("--verify", narrate_verify,
                        "grid-check unilateral deviations");
  narrate_cmd->add_option("--step", narrate_step, "deviation grid step");
  narrate_cmd->add_option("--plot", narrate_plot, "ternary SVG path (n=3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    Json err;
    err["error"] = "BadInput";
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  }

  try {
    if (update_cmd->parsed()) return run_update(update_args);
    if (check_cmd->parsed()) return run_check(check_args);
    if (disagree_cmd->parsed()) {
      const inertia::Belief prior =
          inertia::belief_from_json(inertia::load_json_arg(dis_prior));
      const auto witness = inertia::find_disagreement(
          inertia::divergence_from_string(dis_a),
          inertia::divergence_from_string(dis_b), prior, dis_budget, dis_seed);
      emit(inertia::disagreement_to_json(witness));
      return 0;
    }
    if (represent_cmd->parsed()) {
      const inertia::UpdatingRule rule =
          inertia::rule_from_json(inertia::load_json_arg(rep_rule));
      const inertia::SignalStructure structure = inertia::construct(rule);
      const Json out = inertia::signal_structure_to_json(structure);
      if (rep_out.empty()) {
        emit(out);
      } else {
        std::ofstream f(rep_out);
        f << out.dump(2) << "\n";
      }
      return 0;
    }
    if (trade_cmd->parsed()) {
      const Json j = inertia::load_json_arg(trade_file);
      const inertia::ExchangeEconomy economy = inertia::economy_from_json(j);
      const inertia::InfoSet info = inertia::infoset_from_json(
          j.at("infoset"), economy.prior.size());
      const auto trade =
          inertia::detect_speculative_trade(economy, info, trade_step);
      emit(inertia::trade_result_to_json(trade));
      return 0;
    }
    if (narrate_cmd->parsed()) {
      const inertia::GameSpec game =
          inertia::game_from_json(inertia::load_json_arg(narrate_file));
      const inertia::EquilibriumResult eq =
          inertia::equilibrium(game, narrate_force);
      Json out = inertia::equilibrium_to_json(eq);
      if (narrate_verify) {
        out["best_response"] = inertia::best_response_to_json(
            inertia::best_response_check(game, eq, narrate_step));
      }
      emit(out);
      if (!narrate_plot.empty() && game.mu.size() == 3) {
        inertia::TernaryDiagram diagram;
        diagram.prior = game.mu;
        diagram.points.emplace_back("truth", game.nu);
        diagram.points.emplace_back("claim1", eq.claim1);
        diagram.points.emplace_back("claim2", eq.claim2);
        diagram.points.emplace_back("posterior", eq.receiver_posterior);
        inertia::render_ternary(diagram, narrate_plot);
      }
      return 0;
    }
  } catch (const inertia::Error& e) {
    std::cerr << inertia::error_to_json(e).dump(2) << "\n";
    return e.is_solver_failure() ? 3 : 2;
  } catch (const nlohmann::json::exception& e) {
    Json err;
    err["error"] = "BadInput";
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
