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

#include <random>

#include "inertia/infoset.hpp"

using namespace inertia;

TEST_CASE("alpha_event builds a single equality piece") {
  // S = {n, p, c}; pi(p) + pi(c) = 0.8
  const InfoSet I = alpha_event(3, {1, 2}, 0.8);
  REQUIRE(I.pieces().size() == 1);
  CHECK(I.pieces()[0].form.kind == PieceForm::Kind::AlphaEvent);
  CHECK(contains(I, validate({0.2, 0.48, 0.32})));
  CHECK_FALSE(contains(I, validate({0.3, 0.4, 0.3})));
}

TEST_CASE("alpha_event degenerate cases") {
  const InfoSet vertex = alpha_event(3, {0}, 1.0);
  CHECK(contains(vertex, validate({1.0, 0.0, 0.0})));
  CHECK_FALSE(contains(vertex, validate({0.9, 0.1, 0.0})));

  const InfoSet whole = alpha_event(3, {0, 1, 2}, 1.0);
  CHECK(contains(whole, validate({0.3, 0.3, 0.4})));

  CHECK_THROWS_AS(alpha_event(3, {0, 1, 2}, 0.5), Error);
  CHECK_THROWS_AS(alpha_event(3, {}, 0.5), Error);
  CHECK_THROWS_AS(alpha_event(3, {0}, 1.5), Error);
}

TEST_CASE("interval builds the two-inequality piece") {
  const InfoSet I = interval(3, {1}, 0.3, 0.5);
  CHECK(contains(I, validate({0.5, 0.4, 0.1})));
  CHECK_FALSE(contains(I, validate({0.5, 0.2, 0.3})));
  CHECK_THROWS_AS(interval(3, {1}, 0.5, 0.3), Error);
  // collapsed interval equals the alpha event as a set
  const InfoSet collapsed = interval(3, {1, 2}, 0.8, 0.8);
  const InfoSet event = alpha_event(3, {1, 2}, 0.8);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    double a = uni(rng), b = uni(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    const Belief x = validate({1.0 - a - b, a, b});
    CHECK(contains(collapsed, x) == contains(event, x));
  }
  // lo=0, hi=1 is the whole simplex
  CHECK(contains(interval(3, {0}, 0.0, 1.0), validate({0.3, 0.3, 0.4})));
}

TEST_CASE("qualitative builds the half-space piece") {
  // c at least twice as likely as p, S = {n, p, c}
  const InfoSet I = qualitative(3, {2}, {1}, 2.0);
  CHECK(contains(I, validate({0.3, 0.2, 0.5})));
  CHECK_FALSE(contains(I, validate({0.3, 0.3, 0.4})));
  // gamma = 0 is vacuous
  CHECK(contains(qualitative(3, {0}, {1}, 0.0), validate({0.0, 0.5, 0.5})));
  // classic A at least as likely as B
  const InfoSet half = qualitative(3, {0}, {1}, 1.0);
  CHECK_FALSE(contains(half, validate({0.3, 0.4, 0.3})));
  CHECK(contains(half, validate({0.4, 0.3, 0.3})));
}

TEST_CASE("finite sets store one point piece per belief") {
  const InfoSet I =
      finite_set({validate({0.25, 0.25, 0.5}), validate({0.2, 0.4, 0.4})});
  REQUIRE(I.pieces().size() == 2);
  CHECK(contains(I, validate({0.25, 0.25, 0.5})));
  CHECK(contains(I, validate({0.2, 0.4, 0.4})));
  CHECK_FALSE(contains(I, validate({0.3, 0.3, 0.4})));
  CHECK(I.pieces()[0].equalities.size() == 3);
}

TEST_CASE("is_empty detects contradictory pieces") {
  ConvexPiece piece;
  piece.dim = 3;
  piece.equalities.push_back({{1.0, 0.0, 0.0}, 0.6});
  piece.equalities.push_back({{1.0, 0.0, 0.0}, 0.4});
  CHECK(is_empty(piece));
  piece.equalities.pop_back();
  CHECK_FALSE(is_empty(piece));
  const auto witness = feasible_point(piece);
  REQUIRE(witness.has_value());
  CHECK(contains(piece, *witness));
}

TEST_CASE("intersection drops empty conjunctions and can fail entirely") {
  const InfoSet a = alpha_event(3, {0}, 0.3);
  const InfoSet whole = interval(3, {0}, 0.0, 1.0);
  const InfoSet kept = intersect({a, whole});
  CHECK(contains(kept, validate({0.3, 0.4, 0.3})));
  CHECK_THROWS_AS(intersect({a, alpha_event(3, {0}, 0.6)}), Error);
}

TEST_CASE("intersection of two disjoint alpha events is tagged as a pair") {
  const InfoSet I =
      intersect({alpha_event(4, {0}, 0.4), alpha_event(4, {1}, 0.1)});
  REQUIRE(I.pieces().size() == 1);
  CHECK(I.pieces()[0].form.kind == PieceForm::Kind::DisjointAlphaPair);
  // overlapping events stay generic
  const InfoSet J =
      intersect({alpha_event(4, {0, 1}, 0.5), alpha_event(4, {1, 2}, 0.5)});
  CHECK(J.pieces()[0].form.kind == PieceForm::Kind::Generic);
}

TEST_CASE("union and intersection membership match the boolean structure") {
  const InfoSet A = alpha_event(3, {0}, 0.2);
  const InfoSet B = qualitative(3, {1}, {2}, 1.0);
  const InfoSet U = union_of({A, B});
  const InfoSet X = intersect({interval(3, {0}, 0.1, 0.5), B});
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    double a = uni(rng), b = uni(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    const Belief x = validate({1.0 - a - b, a, b});
    CHECK(contains(U, x) == (contains(A, x) || contains(B, x)));
    CHECK(contains(X, x) ==
          (contains(interval(3, {0}, 0.1, 0.5), x) && contains(B, x)));
  }
}

TEST_CASE("the smoking statement is a non-convex union of two alpha events") {
  const InfoSet I =
      union_of({alpha_event(3, {0}, 0.09), alpha_event(3, {0}, 0.17)});
  CHECK(contains(I, validate({0.09, 0.5, 0.41})));
  CHECK(contains(I, validate({0.17, 0.5, 0.33})));
  CHECK_FALSE(contains(I, validate({0.13, 0.5, 0.37})));
}

TEST_CASE("piece cap is enforced") {
  std::vector<InfoSet> many;
  for (int i = 0; i < 1025; ++i) {
    many.push_back(precise(validate({0.5, 0.25, 0.25})));
  }
  CHECK_THROWS_AS(union_of(many), Error);
}

TEST_CASE("custom pieces carry arbitrary polyhedra") {
  ConvexPiece piece;
  piece.dim = 3;
  piece.inequalities.push_back({{1.0, -1.0, 0.0}, 0.1});   // pi0 - pi1 <= 0.1
  piece.inequalities.push_back({{0.0, 0.0, 1.0}, 0.25});   // pi2 <= 0.25
  const InfoSet I = custom({piece}, "demo polytope");
  CHECK(I.description() == "demo polytope");
  CHECK(contains(I, validate({0.4, 0.4, 0.2})));
  CHECK_FALSE(contains(I, validate({0.6, 0.2, 0.2})));
  CHECK(I.pieces()[0].form.kind == PieceForm::Kind::Generic);
}

TEST_CASE("every constructor output contains its feasibility witness") {
  const std::vector<InfoSet> sets = {
      alpha_event(3, {1, 2}, 0.8),
      interval(3, {1}, 0.3, 0.5),
      qualitative(3, {2}, {1}, 2.0),
      precise(validate({0.25, 0.25, 0.5})),
      union_of({alpha_event(3, {0}, 0.09), alpha_event(3, {0}, 0.17)}),
      intersect({alpha_event(3, {0}, 0.4), alpha_event(3, {1}, 0.1)}),
  };
  for (const auto& I : sets) {
    for (const auto& piece : I.pieces()) {
      const auto w = feasible_point(piece);
      REQUIRE(w.has_value());
      CHECK(contains(I, *w));
    }
  }
}
