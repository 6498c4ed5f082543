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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "inertia/json_io.hpp"

using namespace inertia;

TEST_CASE("numbers are emitted at 12 significant digits, infinities as strings") {
  CHECK(number12(1.0 / 3.0).get<double>() == doctest::Approx(0.333333333333));
  CHECK(round12(0.1234567890123456789) == 0.123456789012);
  CHECK(number12(std::numeric_limits<double>::infinity()) == Json("inf"));
  CHECK(number12(-std::numeric_limits<double>::infinity()) == Json("-inf"));
}

TEST_CASE("belief round trip and validation errors") {
  const Belief b = belief_from_json(Json::parse("[0.5, 0.3, 0.2]"));
  CHECK(b[1] == 0.3);
  CHECK(belief_to_json(b).dump() == "[0.5,0.3,0.2]");
  CHECK_THROWS_AS(belief_from_json(Json::parse("[0.5, 0.6, 0.2]")), Error);
  CHECK_THROWS_AS(belief_from_json(Json::parse("{\"a\": 1}")), Error);
}

TEST_CASE("divergence specs parse from objects and shorthand strings") {
  CHECK(divergence_from_json(Json::parse(R"({"kind":"kl"})")).kind() ==
        DivergenceKind::KL);
  CHECK(divergence_from_string("euclidean").kind() == DivergenceKind::Euclidean);
  const auto alpha = divergence_from_string("alpha:0.7");
  CHECK(alpha.kind() == DivergenceKind::Alpha);
  CHECK(alpha.alpha_param() == doctest::Approx(0.7));
  const auto hb = divergence_from_string("h_bayesian:0.7:1,1.5,0.5");
  CHECK(hb.kind() == DivergenceKind::HBayesian);
  const auto hb2 = divergence_from_json(
      Json::parse(R"({"kind":"h_bayesian","rho":0.7,"psi":[1,1.5,0.5]})"));
  CHECK(hb2.kind() == DivergenceKind::HBayesian);
  CHECK_THROWS_AS(divergence_from_string("mahalanobis"), Error);
}

TEST_CASE("info sets parse every constructor, with labels or indices") {
  const Json j = Json::parse(R"({
    "labels": ["n", "p", "c"],
    "type": "union",
    "of": [
      {"type": "alpha_event", "event": ["p", "c"], "alpha": 0.8},
      {"type": "intersect", "of": [
        {"type": "interval", "event": [0], "lo": 0.1, "hi": 0.9},
        {"type": "qualitative", "a": ["c"], "b": ["p"], "gamma": 2.0}
      ]},
      {"type": "finite", "points": [[0.25, 0.25, 0.5]]},
      {"type": "precise", "point": [0.2, 0.4, 0.4]}
    ]
  })");
  const InfoSet I = infoset_from_json(j, 3);
  CHECK(I.pieces().size() == 4);
  CHECK(contains(I, validate({0.2, 0.48, 0.32})));   // the alpha event
  CHECK(contains(I, validate({0.3, 0.2, 0.5})));     // the intersection
  CHECK(contains(I, validate({0.25, 0.25, 0.5})));   // the finite point
  CHECK_THROWS_AS(infoset_from_json(Json::parse(R"({"type":"moment_ball"})"), 3),
                  Error);
}

TEST_CASE("update results serialize deterministically with runner-ups") {
  const Belief mu = validate({0.4, 0.3, 0.3});
  const InfoSet I = finite_set(
      {validate({0.3, 0.375, 0.325}), validate({0.335, 0.405, 0.26})});
  const UpdateResult r = update(DivergenceSpec::kl(), mu, I);
  const Json j = update_result_to_json(r, true);
  CHECK(j.at("piece_objectives").size() == 2);
  CHECK(j.at("trace").at("pieces").size() == 2);
  CHECK(j.dump() == update_result_to_json(update(DivergenceSpec::kl(), mu, I),
                                          true)
                        .dump());
  // an infinite objective serializes as a string
  const UpdateResult r2 =
      update(DivergenceSpec::kl(), validate({0.5, 0.3, 0.2}),
             alpha_event(3, {1, 2}, 1.0));
  CHECK(update_result_to_json(r2).at("objective") == Json("inf"));
}

TEST_CASE("state spaces round-trip with optional values") {
  const StateSpace s = state_space_from_json(
      Json::parse(R"({"labels":["n","p","c"],"values":[0.2,0.4,0.8]})"));
  CHECK(s.size() == 3);
  CHECK(s.values()[2] == 0.8);
  CHECK(state_space_to_json(s).dump() ==
        R"({"labels":["n","p","c"],"values":[0.2,0.4,0.8]})");
  const StateSpace bare =
      state_space_from_json(Json::parse(R"({"labels":["a","b"]})"));
  CHECK_FALSE(bare.has_values());
  CHECK_THROWS_AS(state_space_from_json(Json::parse(R"({"values":[1]})")),
                  Error);
}

TEST_CASE("inline JSON and file arguments are distinguished") {
  CHECK(load_json_arg("[0.5, 0.5]").is_array());
  CHECK_THROWS_AS(load_json_arg("/nonexistent/path.json"), Error);
}
