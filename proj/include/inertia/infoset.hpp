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
#include <utility>
#include <vector>

#include "inertia/linprog.hpp"
#include "inertia/simplex.hpp"

namespace inertia {

// Hard cap on pieces per information set; larger unions are rejected rather
// than silently truncated.
inline constexpr int kMaxPieces = 1024;

// Structural pattern a piece was built from, kept so the updater can
// dispatch to a closed form instead of the generic solver.
struct PieceForm {
  enum class Kind { Generic, AlphaEvent, Interval, Point, DisjointAlphaPair };
  Kind kind = Kind::Generic;
  std::vector<int> event;        // AlphaEvent/Interval; first event of a pair
  std::vector<int> event2;       // second event of a DisjointAlphaPair
  double alpha = 0.0;            // AlphaEvent; first alpha of a pair
  double alpha2 = 0.0;
  double lo = 0.0, hi = 0.0;     // Interval
  std::optional<Belief> point;   // Point
};

// One convex component: linear equalities a.pi = b and inequalities
// a.pi <= b, implicitly intersected with the probability simplex.
struct ConvexPiece {
  int dim = 0;
  std::vector<std::pair<std::vector<double>, double>> equalities;
  std::vector<std::pair<std::vector<double>, double>> inequalities;
  PieceForm form;
};

// Nonempty closed finite union of convex pieces over the simplex.
class InfoSet {
 public:
  InfoSet(std::vector<ConvexPiece> pieces, std::string description);

  int dim() const { return dim_; }
  const std::vector<ConvexPiece>& pieces() const { return pieces_; }
  const std::string& description() const { return description_; }

 private:
  int dim_ = 0;
  std::vector<ConvexPiece> pieces_;
  std::string description_;
};

// {pi : pi(E) = alpha}. Throws EmptyEvent, InfeasibleAlpha (E = S with
// alpha != 1), BadInput for alpha outside [0,1].
InfoSet alpha_event(int n, const std::vector<int>& event, double alpha);

// {pi : lo <= pi(E) <= hi}. Throws BadBounds.
InfoSet interval(int n, const std::vector<int>& event, double lo, double hi);

// {pi : pi(A) >= gamma * pi(B)}.
InfoSet qualitative(int n, const std::vector<int>& a,
                    const std::vector<int>& b, double gamma);

// Singleton {pi} and finite point sets (one zero-dimensional piece each).
InfoSet precise(const Belief& pi);
InfoSet finite_set(const std::vector<Belief>& points);

// Union: concatenates piece lists (capped at kMaxPieces).
InfoSet union_of(const std::vector<InfoSet>& sets);

// Intersection: all pairwise piece conjunctions, empty ones dropped.
// Throws EmptyIntersection when nothing survives.
InfoSet intersect(const std::vector<InfoSet>& sets);

// Arbitrary polyhedral pieces (provenance "custom").
InfoSet custom(std::vector<ConvexPiece> pieces, const std::string& description);

// LP feasibility of one piece over the simplex.
bool is_empty(const ConvexPiece& piece);

// A vertex of the piece, if nonempty.
std::optional<Belief> feasible_point(const ConvexPiece& piece);

// Membership within tolerance (all constraints of some piece).
bool contains(const ConvexPiece& piece, const Belief& pi, double tol = 1e-8);
bool contains(const InfoSet& set, const Belief& pi, double tol = 1e-8);

// The piece's constraint system as LP rows, including the simplex equality.
std::vector<LpConstraint> piece_constraints(const ConvexPiece& piece);

}  // namespace inertia
