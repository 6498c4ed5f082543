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

#include "inertia/infoset.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace inertia {

namespace {

void check_event(int n, const std::vector<int>& event, const char* what) {
  if (event.empty()) {
    throw Error(ErrorCode::EmptyEvent, std::string(what) + " event is empty");
  }
  std::set<int> seen;
  for (int s : event) {
    if (s < 0 || s >= n) {
      throw Error(ErrorCode::BadInput,
                  std::string(what) + " event has out-of-range state index");
    }
    if (!seen.insert(s).second) {
      throw Error(ErrorCode::BadInput,
                  std::string(what) + " event repeats a state");
    }
  }
}

std::vector<double> indicator(int n, const std::vector<int>& event) {
  std::vector<double> a(n, 0.0);
  for (int s : event) a[s] = 1.0;
  return a;
}

std::string event_str(const std::vector<int>& event) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < event.size(); ++i) {
    if (i) out << ",";
    out << event[i];
  }
  out << "}";
  return out.str();
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> sa(a.begin(), a.end());
  return std::none_of(b.begin(), b.end(),
                      [&](int s) { return sa.count(s) > 0; });
}

}  // namespace

InfoSet::InfoSet(std::vector<ConvexPiece> pieces, std::string description)
    : pieces_(std::move(pieces)), description_(std::move(description)) {
  if (pieces_.empty()) {
    throw Error(ErrorCode::EmptyInfoSet, "information set has no pieces");
  }
  if (static_cast<int>(pieces_.size()) > kMaxPieces) {
    throw Error(ErrorCode::PieceOverflow,
                "information set exceeds the piece cap of " +
                    std::to_string(kMaxPieces));
  }
  dim_ = pieces_.front().dim;
  bool any_nonempty = false;
  for (const auto& p : pieces_) {
    if (p.dim != dim_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "pieces have differing dimensions");
    }
    if (!any_nonempty && !is_empty(p)) any_nonempty = true;
  }
  if (!any_nonempty) {
    throw Error(ErrorCode::EmptyInfoSet, "all pieces are empty");
  }
}

InfoSet alpha_event(int n, const std::vector<int>& event, double alpha) {
  check_event(n, event, "alpha_event");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::BadInput, "alpha must lie in [0,1]");
  }
  if (static_cast<int>(event.size()) == n && alpha != 1.0) {
    throw Error(ErrorCode::InfeasibleAlpha,
                "event covers all states; only alpha = 1 is feasible");
  }
  ConvexPiece piece;
  piece.dim = n;
  piece.equalities.emplace_back(indicator(n, event), alpha);
  piece.form.kind = PieceForm::Kind::AlphaEvent;
  piece.form.event = event;
  piece.form.alpha = alpha;
  std::ostringstream desc;
  desc << "alpha_event(E=" << event_str(event) << ", alpha=" << alpha << ")";
  return InfoSet({piece}, desc.str());
}

InfoSet interval(int n, const std::vector<int>& event, double lo, double hi) {
  check_event(n, event, "interval");
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw Error(ErrorCode::BadBounds, "interval needs 0 <= lo <= hi <= 1");
  }
  ConvexPiece piece;
  piece.dim = n;
  const std::vector<double> a = indicator(n, event);
  piece.inequalities.emplace_back(a, hi);  // pi(E) <= hi
  std::vector<double> neg(a);
  for (double& v : neg) v = -v;
  piece.inequalities.emplace_back(neg, -lo);  // pi(E) >= lo
  piece.form.kind = PieceForm::Kind::Interval;
  piece.form.event = event;
  piece.form.lo = lo;
  piece.form.hi = hi;
  std::ostringstream desc;
  desc << "interval(E=" << event_str(event) << ", [" << lo << "," << hi
       << "])";
  return InfoSet({piece}, desc.str());
}

InfoSet qualitative(int n, const std::vector<int>& a, const std::vector<int>& b,
                    double gamma) {
  check_event(n, a, "qualitative");
  check_event(n, b, "qualitative");
  if (!(gamma >= 0.0)) {
    throw Error(ErrorCode::BadInput, "gamma must be non-negative");
  }
  ConvexPiece piece;
  piece.dim = n;
  // gamma * pi(B) - pi(A) <= 0
  std::vector<double> row(n, 0.0);
  for (int s : b) row[s] += gamma;
  for (int s : a) row[s] -= 1.0;
  piece.inequalities.emplace_back(std::move(row), 0.0);
  std::ostringstream desc;
  desc << "qualitative(A=" << event_str(a) << ", B=" << event_str(b)
       << ", gamma=" << gamma << ")";
  return InfoSet({piece}, desc.str());
}

namespace {
ConvexPiece point_piece(const Belief& pi) {
  ConvexPiece piece;
  piece.dim = pi.size();
  for (int i = 0; i < pi.size(); ++i) {
    std::vector<double> row(pi.size(), 0.0);
    row[i] = 1.0;
    piece.equalities.emplace_back(std::move(row), pi[i]);
  }
  piece.form.kind = PieceForm::Kind::Point;
  piece.form.point = pi;
  return piece;
}
}  // namespace

InfoSet precise(const Belief& pi) {
  return InfoSet({point_piece(pi)}, "precise");
}

InfoSet finite_set(const std::vector<Belief>& points) {
  if (points.empty()) {
    throw Error(ErrorCode::EmptyInfoSet, "finite set needs at least one point");
  }
  std::vector<ConvexPiece> pieces;
  pieces.reserve(points.size());
  for (const Belief& p : points) pieces.push_back(point_piece(p));
  return InfoSet(std::move(pieces),
                 "finite(" + std::to_string(points.size()) + " points)");
}

InfoSet union_of(const std::vector<InfoSet>& sets) {
  if (sets.empty()) {
    throw Error(ErrorCode::EmptyInfoSet, "union of nothing");
  }
  std::vector<ConvexPiece> pieces;
  std::ostringstream desc;
  desc << "union(";
  for (size_t i = 0; i < sets.size(); ++i) {
    if (i) desc << ", ";
    desc << sets[i].description();
    for (const auto& p : sets[i].pieces()) {
      pieces.push_back(p);
      if (static_cast<int>(pieces.size()) > kMaxPieces) {
        throw Error(ErrorCode::PieceOverflow,
                    "union exceeds the piece cap of " +
                        std::to_string(kMaxPieces));
      }
    }
  }
  desc << ")";
  return InfoSet(std::move(pieces), desc.str());
}

InfoSet intersect(const std::vector<InfoSet>& sets) {
  if (sets.empty()) {
    throw Error(ErrorCode::EmptyInfoSet, "intersection of nothing");
  }
  std::vector<ConvexPiece> acc = sets.front().pieces();
  for (size_t k = 1; k < sets.size(); ++k) {
    std::vector<ConvexPiece> next;
    for (const auto& p : acc) {
      for (const auto& q : sets[k].pieces()) {
        ConvexPiece merged;
        merged.dim = p.dim;
        merged.equalities = p.equalities;
        merged.inequalities = p.inequalities;
        merged.equalities.insert(merged.equalities.end(),
                                 q.equalities.begin(), q.equalities.end());
        merged.inequalities.insert(merged.inequalities.end(),
                                   q.inequalities.begin(),
                                   q.inequalities.end());
        // Two alpha-events on disjoint events admit a closed form.
        if (p.form.kind == PieceForm::Kind::AlphaEvent &&
            q.form.kind == PieceForm::Kind::AlphaEvent &&
            disjoint(p.form.event, q.form.event)) {
          merged.form.kind = PieceForm::Kind::DisjointAlphaPair;
          merged.form.event = p.form.event;
          merged.form.alpha = p.form.alpha;
          merged.form.event2 = q.form.event;
          merged.form.alpha2 = q.form.alpha;
        }
        if (!is_empty(merged)) next.push_back(std::move(merged));
        if (static_cast<int>(next.size()) > kMaxPieces) {
          throw Error(ErrorCode::PieceOverflow,
                      "intersection exceeds the piece cap of " +
                          std::to_string(kMaxPieces));
        }
      }
    }
    acc = std::move(next);
    if (acc.empty()) {
      throw Error(ErrorCode::EmptyIntersection,
                  "all piece conjunctions are empty");
    }
  }
  std::ostringstream desc;
  desc << "intersect(";
  for (size_t i = 0; i < sets.size(); ++i) {
    if (i) desc << ", ";
    desc << sets[i].description();
  }
  desc << ")";
  return InfoSet(std::move(acc), desc.str());
}

InfoSet custom(std::vector<ConvexPiece> pieces, const std::string& description) {
  return InfoSet(std::move(pieces), description);
}

std::vector<LpConstraint> piece_constraints(const ConvexPiece& piece) {
  std::vector<LpConstraint> cons;
  cons.push_back({std::vector<double>(piece.dim, 1.0), LpRelation::Eq, 1.0});
  for (const auto& [a, b] : piece.equalities) {
    cons.push_back({a, LpRelation::Eq, b});
  }
  for (const auto& [a, b] : piece.inequalities) {
    cons.push_back({a, LpRelation::LessEq, b});
  }
  return cons;
}

bool is_empty(const ConvexPiece& piece) {
  return !lp_feasible_point(piece.dim, piece_constraints(piece)).has_value();
}

std::optional<Belief> feasible_point(const ConvexPiece& piece) {
  auto x = lp_feasible_point(piece.dim, piece_constraints(piece));
  if (!x) return std::nullopt;
  return validate(*x);
}

bool contains(const ConvexPiece& piece, const Belief& pi, double tol) {
  if (pi.size() != piece.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "belief dimension differs from piece dimension");
  }
  for (const auto& [a, b] : piece.equalities) {
    double dot = 0.0;
    for (int i = 0; i < pi.size(); ++i) dot += a[i] * pi[i];
    if (std::abs(dot - b) > tol) return false;
  }
  for (const auto& [a, b] : piece.inequalities) {
    double dot = 0.0;
    for (int i = 0; i < pi.size(); ++i) dot += a[i] * pi[i];
    if (dot > b + tol) return false;
  }
  return true;
}

bool contains(const InfoSet& set, const Belief& pi, double tol) {
  return std::any_of(set.pieces().begin(), set.pieces().end(),
                     [&](const ConvexPiece& p) { return contains(p, pi, tol); });
}

}  // namespace inertia
