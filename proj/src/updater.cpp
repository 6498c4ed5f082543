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

#include "inertia/updater.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace inertia {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPinnedTol = 1e-12;
constexpr double kActiveTol = 1e-7;
constexpr double kTinyX = 1e-300;

// ------------------------------------------------------------------
// Reduced problem over the free (not pinned-to-zero) coordinates.
// ------------------------------------------------------------------

struct ReducedPiece {
  std::vector<int> free_idx;                 // free coordinate -> original
  std::vector<LpConstraint> constraints;     // over free coords, incl. sum=1
  std::vector<double> weights;               // effective sigma weights (free)
  std::vector<double> prior_free;            // prior restricted (warm start)
  bool euclidean = false;
  const DivergenceSpec* spec = nullptr;

  int n() const { return static_cast<int>(free_idx.size()); }

  double objective(const std::vector<double>& x) const {
    if (euclidean) {
      double v = 0.0;
      for (int i = 0; i < n(); ++i) {
        const double d = x[i] - prior_free[i];
        v += d * d;
      }
      return v;
    }
    double v = 0.0;
    for (int i = 0; i < n(); ++i) {
      v -= weights[i] * spec->sigma(std::max(x[i], kTinyX) / weights[i]);
    }
    return v;
  }

  void gradient(const std::vector<double>& x, std::vector<double>& g) const {
    g.resize(n());
    if (euclidean) {
      for (int i = 0; i < n(); ++i) g[i] = 2.0 * (x[i] - prior_free[i]);
      return;
    }
    for (int i = 0; i < n(); ++i) {
      double gi = -spec->sigma_prime(std::max(x[i], kTinyX) / weights[i]);
      if (!std::isfinite(gi)) gi = -1e18;
      g[i] = gi;
    }
  }

  double hess_diag(double xi, int i) const {
    if (euclidean) return 2.0;
    return -spec->sigma_second(std::max(xi, kTinyX) / weights[i]) / weights[i];
  }
};

ReducedPiece reduce_piece(const DivergenceSpec& spec, const Belief& prior,
                          const ConvexPiece& piece,
                          const std::vector<bool>& pinned) {
  ReducedPiece red;
  red.spec = &spec;
  red.euclidean = spec.kind() == DivergenceKind::Euclidean;
  const std::vector<double> w = red.euclidean
                                    ? prior.weights()
                                    : spec.effective_weights(prior);
  for (int i = 0; i < piece.dim; ++i) {
    if (!pinned[i]) {
      red.free_idx.push_back(i);
      red.weights.push_back(w[i]);
      red.prior_free.push_back(prior[i]);
    }
  }
  const int nf = red.n();
  auto restrict_row = [&](const std::vector<double>& a) {
    std::vector<double> out(nf);
    for (int i = 0; i < nf; ++i) out[i] = a[red.free_idx[i]];
    return out;
  };
  red.constraints.push_back({std::vector<double>(nf, 1.0), LpRelation::Eq, 1.0});
  for (const auto& [a, b] : piece.equalities) {
    std::vector<double> row = restrict_row(a);
    const bool trivial = std::all_of(row.begin(), row.end(),
                                     [](double v) { return v == 0.0; });
    if (!trivial) red.constraints.push_back({std::move(row), LpRelation::Eq, b});
  }
  for (const auto& [a, b] : piece.inequalities) {
    std::vector<double> row = restrict_row(a);
    const bool trivial = std::all_of(row.begin(), row.end(),
                                     [](double v) { return v == 0.0; });
    if (!trivial) {
      red.constraints.push_back({std::move(row), LpRelation::LessEq, b});
    }
  }
  return red;
}

std::vector<bool> pinned_coordinates(const ConvexPiece& piece) {
  std::vector<bool> pinned(piece.dim, false);
  if (piece.equalities.empty() && piece.inequalities.empty()) return pinned;
  const auto cons = piece_constraints(piece);
  for (int i = 0; i < piece.dim; ++i) {
    std::vector<double> c(piece.dim, 0.0);
    c[i] = -1.0;  // maximize x_i
    const LpResult r = solve_lp(c, cons);
    if (r.status == LpStatus::Optimal && -r.objective <= kPinnedTol) {
      pinned[i] = true;
    }
  }
  return pinned;
}

// ------------------------------------------------------------------
// Away-step Frank-Wolfe with exact (bisection) line search.
// ------------------------------------------------------------------

struct Atoms {
  std::vector<std::vector<double>> v;
  std::vector<double> w;

  int find(const std::vector<double>& x) const {
    for (size_t k = 0; k < v.size(); ++k) {
      double d = 0.0;
      for (size_t i = 0; i < x.size(); ++i) {
        d = std::max(d, std::abs(v[k][i] - x[i]));
      }
      if (d <= 1e-12) return static_cast<int>(k);
    }
    return -1;
  }

  std::vector<double> combine() const {
    std::vector<double> x(v.empty() ? 0 : v.front().size(), 0.0);
    for (size_t k = 0; k < v.size(); ++k) {
      for (size_t i = 0; i < x.size(); ++i) x[i] += w[k] * v[k][i];
    }
    return x;
  }
};

std::vector<double> lmo(const ReducedPiece& red, const std::vector<double>& c) {
  const LpResult r = solve_lp(c, red.constraints);
  if (r.status != LpStatus::Optimal) {
    throw Error(ErrorCode::SolverFailure,
                "linear minimization oracle failed on a nonempty piece");
  }
  return r.x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// phi'(gamma) = grad f(x + gamma d) . d, increasing in gamma (f convex).
double exact_step(const ReducedPiece& red, const std::vector<double>& x,
                  const std::vector<double>& d, double gamma_max) {
  std::vector<double> y(x.size()), g;
  auto slope = [&](double gamma) {
    for (size_t i = 0; i < x.size(); ++i) {
      y[i] = std::max(x[i] + gamma * d[i], 0.0);
    }
    red.gradient(y, g);
    return dot(g, d);
  };
  if (slope(0.0) >= 0.0) return 0.0;
  if (slope(gamma_max) <= 0.0) return gamma_max;
  double lo = 0.0, hi = gamma_max;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct FwState {
  std::vector<double> x;
  double gap = kInf;
  int iterations = 0;
};

FwState away_step_fw(const ReducedPiece& red, Atoms& atoms, double gap_target,
                     int max_iter) {
  FwState st;
  st.x = atoms.combine();
  std::vector<double> g;
  for (st.iterations = 0; st.iterations < max_iter; ++st.iterations) {
    red.gradient(st.x, g);
    const std::vector<double> v_fw = lmo(red, g);
    std::vector<double> d_fw(st.x.size());
    for (size_t i = 0; i < st.x.size(); ++i) d_fw[i] = v_fw[i] - st.x[i];
    st.gap = -dot(g, d_fw);
    if (st.gap <= gap_target) break;

    // steepest away atom (among atoms actually carrying weight)
    int away = -1;
    double away_score = -kInf;
    for (size_t k = 0; k < atoms.v.size(); ++k) {
      if (atoms.w[k] <= 1e-14) continue;
      const double s = dot(g, atoms.v[k]);
      if (s > away_score) {
        away_score = s;
        away = static_cast<int>(k);
      }
    }

    bool use_away = false;
    std::vector<double> d = d_fw;
    double gamma_max = 1.0;
    if (away >= 0 && atoms.v.size() > 1) {
      std::vector<double> d_aw(st.x.size());
      for (size_t i = 0; i < st.x.size(); ++i) {
        d_aw[i] = st.x[i] - atoms.v[away][i];
      }
      if (-dot(g, d_aw) > st.gap) {
        use_away = true;
        d = d_aw;
        const double wa = atoms.w[away];
        gamma_max = wa / (1.0 - wa);
      }
    }

    const double gamma = exact_step(red, st.x, d, gamma_max);
    if (gamma <= 0.0) break;  // no progress possible along either direction
    for (size_t i = 0; i < st.x.size(); ++i) {
      st.x[i] = std::max(st.x[i] + gamma * d[i], 0.0);
    }

    if (use_away) {
      for (double& wk : atoms.w) wk *= (1.0 + gamma);
      atoms.w[away] -= gamma;
      if (atoms.w[away] <= 1e-14) {
        atoms.v.erase(atoms.v.begin() + away);
        atoms.w.erase(atoms.w.begin() + away);
      }
    } else {
      for (double& wk : atoms.w) wk *= (1.0 - gamma);
      const int k = atoms.find(v_fw);
      if (k >= 0) atoms.w[k] += gamma;
      else {
        atoms.v.push_back(v_fw);
        atoms.w.push_back(gamma);
      }
      for (size_t a = atoms.v.size(); a-- > 0;) {
        if (atoms.w[a] <= 1e-14) {
          atoms.v.erase(atoms.v.begin() + a);
          atoms.w.erase(atoms.w.begin() + a);
        }
      }
    }
    if ((st.iterations & 63) == 63) st.x = atoms.combine();
  }
  return st;
}

// Dense Gaussian elimination with partial pivoting; returns false if singular.
bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= a[i][i];
  return true;
}

// Newton steps on the equality system of the active face. Returns the
// improved point, or x unchanged if the polish could not make progress.
std::vector<double> newton_polish(const ReducedPiece& red,
                                  std::vector<double> x) {
  const int nf = red.n();
  const bool guard_positive = !red.euclidean;

  // active rows: all equalities, active inequalities, active zero bounds
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (const auto& con : red.constraints) {
    const double v = dot(con.a, x);
    if (con.rel == LpRelation::Eq) {
      rows.push_back(con.a);
      rhs.push_back(con.b);
    } else if (con.rel == LpRelation::LessEq && con.b - v <= kActiveTol) {
      rows.push_back(con.a);
      rhs.push_back(con.b);
    }
  }
  if (!guard_positive) {
    for (int i = 0; i < nf; ++i) {
      if (x[i] <= 1e-10) {
        std::vector<double> e(nf, 0.0);
        e[i] = 1.0;
        rows.push_back(std::move(e));
        rhs.push_back(0.0);
        x[i] = 0.0;
      }
    }
  }
  const int m = static_cast<int>(rows.size());

  auto feasible = [&](const std::vector<double>& y) {
    for (int i = 0; i < nf; ++i) {
      if (y[i] < (guard_positive ? 1e-15 : -1e-12)) return false;
    }
    for (const auto& con : red.constraints) {
      const double v = dot(con.a, y);
      if (con.rel == LpRelation::LessEq && v > con.b + 1e-10) return false;
      if (con.rel == LpRelation::Eq && std::abs(v - con.b) > 1e-9) return false;
    }
    return true;
  };

  double fx = red.objective(x);
  std::vector<double> g;
  for (int iter = 0; iter < 25; ++iter) {
    red.gradient(x, g);
    const int dim = nf + m;
    std::vector<std::vector<double>> kkt(dim, std::vector<double>(dim, 0.0));
    std::vector<double> rhs_vec(dim, 0.0);
    for (int i = 0; i < nf; ++i) {
      kkt[i][i] = red.hess_diag(x[i], i);
      rhs_vec[i] = -g[i];
    }
    for (int r = 0; r < m; ++r) {
      for (int i = 0; i < nf; ++i) {
        kkt[i][nf + r] = rows[r][i];
        kkt[nf + r][i] = rows[r][i];
      }
      rhs_vec[nf + r] = rhs[r] - dot(rows[r], x);
    }
    if (!solve_dense(kkt, rhs_vec)) return x;
    double step_norm = 0.0;
    for (int i = 0; i < nf; ++i) {
      step_norm = std::max(step_norm, std::abs(rhs_vec[i]));
    }
    if (step_norm <= 1e-14) break;

    double s = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 40; ++bt, s *= 0.5) {
      std::vector<double> y(nf);
      for (int i = 0; i < nf; ++i) y[i] = x[i] + s * rhs_vec[i];
      if (!feasible(y)) continue;
      const double fy = red.objective(y);
      if (fy <= fx + 1e-12) {
        x = std::move(y);
        fx = fy;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return x;
}

PieceSolution solve_reduced(const ReducedPiece& red, double tol, int max_iter,
                            int full_dim) {
  // Warm start: approximate Euclidean projection of the prior onto the piece.
  std::vector<double> toward_prior(red.n());
  for (int i = 0; i < red.n(); ++i) toward_prior[i] = -red.prior_free[i];
  Atoms atoms;
  atoms.v.push_back(lmo(red, toward_prior));
  atoms.w.push_back(1.0);
  {
    ReducedPiece proj = red;
    proj.euclidean = true;
    away_step_fw(proj, atoms, 1e-12, 200);
  }

  FwState st = away_step_fw(red, atoms, tol * 0.5, max_iter);
  if (st.gap > tol * 0.5 && st.iterations >= max_iter) {
    throw Error(ErrorCode::SolverFailure,
                "no certificate after " + std::to_string(max_iter) +
                    " iterations (gap " + std::to_string(st.gap) + ")");
  }

  std::vector<double> polished = newton_polish(red, st.x);
  std::vector<double> g;
  red.gradient(polished, g);
  const std::vector<double> v = lmo(red, g);
  double polished_gap = 0.0;
  for (int i = 0; i < red.n(); ++i) polished_gap += g[i] * (polished[i] - v[i]);

  const bool keep_polished = polished_gap <= std::max(10.0 * tol, st.gap);
  const std::vector<double>& best = keep_polished ? polished : st.x;
  const double residual = keep_polished ? std::max(polished_gap, 0.0) : st.gap;
  if (residual > 10.0 * tol) {
    throw Error(ErrorCode::SolverFailure,
                "certificate " + std::to_string(residual) +
                    " exceeds 10x the tolerance");
  }

  std::vector<double> full(full_dim, 0.0);
  for (int i = 0; i < red.n(); ++i) full[red.free_idx[i]] = best[i];
  PieceSolution out;
  out.x = validate(full);
  out.kkt_residual = residual;
  out.iterations = st.iterations;
  return out;
}

}  // namespace

const char* update_method_name(UpdateMethod m) {
  switch (m) {
    case UpdateMethod::PriorInSet: return "prior_in_set";
    case UpdateMethod::Singleton: return "singleton";
    case UpdateMethod::ClosedFormAlphaEvent: return "closed_form_alpha_event";
    case UpdateMethod::ClosedFormInterval: return "closed_form_interval";
    case UpdateMethod::ClosedFormDisjointAlphaPair:
      return "closed_form_disjoint_alpha_pair";
    case UpdateMethod::GenericSolver: return "generic_solver";
  }
  return "unknown";
}

Belief closed_form_alpha_event(const DivergenceSpec& spec, const Belief& prior,
                               const std::vector<int>& event, double alpha) {
  if (!spec.is_bayesian()) {
    throw Error(ErrorCode::NotBayesianKind,
                spec.name() + " has no proportional alpha-event form");
  }
  if (!prior.full_support()) {
    throw Error(ErrorCode::PriorNotFullSupport, "prior must be full-support");
  }
  if (event.empty()) throw Error(ErrorCode::EmptyEvent, "empty event");
  const int n = prior.size();
  std::vector<bool> in_event(n, false);
  for (int s : event) in_event[s] = true;
  const double mass_e = prior.mass(event);
  const double mass_c = 1.0 - mass_e;
  if (static_cast<int>(event.size()) == n) {
    if (std::abs(alpha - 1.0) > 1e-12) {
      throw Error(ErrorCode::InfeasibleAlpha, "event covers all states");
    }
    return prior;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = in_event[i] ? alpha * prior[i] / mass_e
                       : (1.0 - alpha) * prior[i] / mass_c;
  }
  return validate(w);
}

Belief closed_form_interval(const DivergenceSpec& spec, const Belief& prior,
                            const std::vector<int>& event, double lo,
                            double hi) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw Error(ErrorCode::BadBounds, "interval needs 0 <= lo <= hi <= 1");
  }
  const double gamma = std::clamp(prior.mass(event), lo, hi);
  return closed_form_alpha_event(spec, prior, event, gamma);
}

Belief closed_form_disjoint_alpha_pair(const DivergenceSpec& spec,
                                       const Belief& prior,
                                       const std::vector<int>& event1,
                                       double alpha1,
                                       const std::vector<int>& event2,
                                       double alpha2) {
  if (!spec.is_bayesian()) {
    throw Error(ErrorCode::NotBayesianKind,
                spec.name() + " has no proportional closed form");
  }
  if (event1.empty() || event2.empty()) {
    throw Error(ErrorCode::EmptyEvent, "empty event");
  }
  const int n = prior.size();
  std::vector<int> block(n, 2);  // 0: E1, 1: E2, 2: complement
  for (int s : event1) block[s] = 0;
  for (int s : event2) {
    if (block[s] == 0) {
      throw Error(ErrorCode::BadInput, "events are not disjoint");
    }
    block[s] = 1;
  }
  const double rest = 1.0 - alpha1 - alpha2;
  const bool has_complement =
      std::any_of(block.begin(), block.end(), [](int b) { return b == 2; });
  if (rest < -1e-12 || (!has_complement && std::abs(rest) > 1e-12)) {
    throw Error(ErrorCode::InfeasibleAlphas,
                "alpha masses are infeasible for these events");
  }
  const double m1 = prior.mass(event1);
  double m2 = 0.0, mc = 0.0;
  for (int i = 0; i < n; ++i) {
    if (block[i] == 1) m2 += prior[i];
    if (block[i] == 2) mc += prior[i];
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    if (block[i] == 0) w[i] = alpha1 * prior[i] / m1;
    else if (block[i] == 1) w[i] = alpha2 * prior[i] / m2;
    else w[i] = std::max(rest, 0.0) * prior[i] / mc;
  }
  return validate(w);
}

PieceSolution solve_piece(const DivergenceSpec& spec, const Belief& prior,
                          const ConvexPiece& piece, double tol, int max_iter) {
  if (!prior.full_support()) {
    throw Error(ErrorCode::PriorNotFullSupport, "prior must be full-support");
  }
  if (piece.form.kind == PieceForm::Kind::Point) {
    return {*piece.form.point, 0.0, 0};
  }
  if (is_empty(piece)) {
    throw Error(ErrorCode::EmptyInfoSet, "piece is empty");
  }
  const std::vector<bool> pinned = pinned_coordinates(piece);
  const ReducedPiece red = reduce_piece(spec, prior, piece, pinned);
  return solve_reduced(red, tol, max_iter, piece.dim);
}

UpdateResult update(const DivergenceSpec& spec, const Belief& prior,
                    const InfoSet& info, const UpdateOptions& options) {
  if (!prior.full_support()) {
    throw Error(ErrorCode::PriorNotFullSupport, "prior must be full-support");
  }
  if (prior.size() != info.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "prior dimension differs from information set dimension");
  }

  UpdateResult result;
  if (contains(info, prior, 1e-9)) {
    result.posterior = prior;
    result.objective = evaluate(spec, prior, prior).value;
    result.method = UpdateMethod::PriorInSet;
    result.piece_index = -1;
    return result;
  }

  const auto& pieces = info.pieces();
  result.pieces.reserve(pieces.size());
  for (int idx = 0; idx < static_cast<int>(pieces.size()); ++idx) {
    const ConvexPiece& piece = pieces[idx];
    PieceOutcome out;
    out.index = idx;
    if (is_empty(piece)) {
      out.empty = true;
      out.objective = kInf;
      result.pieces.push_back(std::move(out));
      continue;
    }
    const PieceForm& form = piece.form;
    const bool closed_ok = !options.disable_closed_forms && spec.is_bayesian();
    if (form.kind == PieceForm::Kind::Point) {
      out.posterior = *form.point;
      out.method = UpdateMethod::Singleton;
    } else if (closed_ok && form.kind == PieceForm::Kind::AlphaEvent) {
      out.posterior = closed_form_alpha_event(spec, prior, form.event,
                                              form.alpha);
      out.method = UpdateMethod::ClosedFormAlphaEvent;
    } else if (closed_ok && form.kind == PieceForm::Kind::Interval) {
      out.posterior = closed_form_interval(spec, prior, form.event, form.lo,
                                           form.hi);
      out.method = UpdateMethod::ClosedFormInterval;
    } else if (closed_ok && form.kind == PieceForm::Kind::DisjointAlphaPair) {
      out.posterior = closed_form_disjoint_alpha_pair(
          spec, prior, form.event, form.alpha, form.event2, form.alpha2);
      out.method = UpdateMethod::ClosedFormDisjointAlphaPair;
    } else {
      const PieceSolution sol =
          solve_piece(spec, prior, piece, options.tol, options.max_iter);
      out.posterior = sol.x;
      out.kkt_residual = sol.kkt_residual;
      out.method = UpdateMethod::GenericSolver;
    }
    out.objective = evaluate(spec, prior, out.posterior).value;
    result.pieces.push_back(std::move(out));
  }

  int best = -1;
  bool tie_seen = false;
  for (int idx = 0; idx < static_cast<int>(result.pieces.size()); ++idx) {
    const PieceOutcome& cand = result.pieces[idx];
    if (cand.empty) continue;
    if (best < 0) {
      best = idx;
      continue;
    }
    const PieceOutcome& cur = result.pieces[best];
    const bool cand_inf = std::isinf(cand.objective);
    const bool cur_inf = std::isinf(cur.objective);
    bool is_tie = false;
    bool cand_better = false;
    if (cand_inf && cur_inf) {
      is_tie = true;
    } else if (cand.objective + options.tie_tol < cur.objective) {
      cand_better = true;
    } else if (cand.objective - options.tie_tol <= cur.objective) {
      is_tie = true;
    }
    if (is_tie) {
      if (linf_distance(cand.posterior, cur.posterior) > 1e-12) {
        tie_seen = true;
        if (lex_less(cand.posterior, cur.posterior)) best = idx;
      }
    } else if (cand_better) {
      best = idx;
    }
  }
  if (best < 0) {
    throw Error(ErrorCode::EmptyInfoSet, "no nonempty piece to select from");
  }
  const PieceOutcome& win = result.pieces[best];
  result.posterior = win.posterior;
  result.objective = win.objective;
  result.piece_index = best;
  result.method = win.method;
  result.kkt_residual = win.kkt_residual;
  result.tie_break_applied = tie_seen;
  return result;
}

namespace {

double piece_slack(const ConvexPiece& piece, const Belief& x) {
  double worst = 0.0;
  for (const auto& [a, b] : piece.equalities) {
    double dot = 0.0;
    for (int i = 0; i < x.size(); ++i) dot += a[i] * x[i];
    worst = std::max(worst, std::abs(dot - b));
  }
  for (const auto& [a, b] : piece.inequalities) {
    double dot = 0.0;
    for (int i = 0; i < x.size(); ++i) dot += a[i] * x[i];
    worst = std::max(worst, std::max(0.0, dot - b));
  }
  return worst;
}

// (objective, lex) comparison used by the oracle.
bool oracle_better(double obj_a, const Belief& a, double obj_b,
                   const Belief& b) {
  if (std::isinf(obj_a) && std::isinf(obj_b)) return lex_less(a, b);
  if (obj_a < obj_b - 1e-15) return true;
  if (obj_a > obj_b + 1e-15) return false;
  return lex_less(a, b);
}

}  // namespace

Belief brute_force_oracle(const DivergenceSpec& spec, const Belief& prior,
                          const InfoSet& info, int k) {
  const int n = info.dim();
  if (n > 4 || k > 400 || k < 1) {
    throw Error(ErrorCode::BadInput, "oracle supports n <= 4 and k <= 400");
  }

  // Composite zero-sum integer offsets reach points that stay on several
  // constraints at once during refinement.
  std::vector<std::vector<int>> moves;
  {
    std::vector<int> delta(n, -6);
    for (;;) {
      int sum = 0;
      for (int v : delta) sum += v;
      bool all_zero = true;
      for (int v : delta) all_zero &= (v == 0);
      if (sum == 0 && !all_zero) moves.push_back(delta);
      int pos = 0;
      while (pos < n && delta[pos] == 6) delta[pos++] = -6;
      if (pos == n) break;
      ++delta[pos];
    }
  }

  // Each piece is scanned and refined on its own; off-piece grid points
  // carry artificially low values, so cross-piece comparison happens only
  // between the refined (honest) minimizers.
  auto refine_on_piece = [&](const ConvexPiece& piece, Belief seed) {
    Belief best = seed;
    double best_obj = evaluate(spec, prior, best).value;
    double h = 1.0 / k;
    for (int level = 0; level < 6; ++level) {
      h *= 0.5;
      const double slack_limit = 1.5 * h;
      auto for_neighbors = [&](const std::function<void(const Belief&)>& fn) {
        for (const auto& delta : moves) {
          std::vector<double> w = best.weights();
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            w[i] += h * delta[i];
            if (w[i] < 0.0) ok = false;
          }
          if (ok) fn(validate(w));
        }
      };
      // tightening: walk down the constraint slack until the halved budget
      // is met (off-set points carry artificially low values, so this phase
      // ignores the objective except to break slack ties)
      for (int sweep = 0; sweep < 500; ++sweep) {
        const double cur_slack = piece_slack(piece, best);
        if (cur_slack <= slack_limit) break;
        Belief pick;
        double pick_slack = kInf, pick_obj = kInf;
        bool found = false;
        for_neighbors([&](const Belief& cand) {
          const double s = piece_slack(piece, cand);
          if (s > cur_slack - 1e-15) return;  // must strictly reduce slack
          const double obj = evaluate(spec, prior, cand).value;
          if (!found || s < pick_slack - 1e-15 ||
              (s <= pick_slack + 1e-15 &&
               oracle_better(obj, cand, pick_obj, pick))) {
            found = true;
            pick = cand;
            pick_slack = s;
            pick_obj = obj;
          }
        });
        if (!found) break;
        best = pick;
        best_obj = pick_obj;
      }
      if (piece_slack(piece, best) > slack_limit) continue;
      // descent among candidates within the slack budget
      for (int sweep = 0; sweep < 500; ++sweep) {
        bool improved = false;
        for_neighbors([&](const Belief& cand) {
          if (piece_slack(piece, cand) > slack_limit) return;
          const double obj = evaluate(spec, prior, cand).value;
          if (oracle_better(obj, cand, best_obj, best)) {
            best = cand;
            best_obj = obj;
            improved = true;
          }
        });
        if (!improved) break;
      }
    }
    // Lattice steps cannot track facets with irrational slopes (the stall
    // distance is the slope's rational-approximation error), so finish with
    // cyclic golden-section slides along an orthonormal basis of the active
    // face.
    const double slack_allow = std::max(piece_slack(piece, best), 1.5 * h);
    std::vector<std::vector<double>> normals;
    normals.push_back(std::vector<double>(n, 1.0));
    auto add_active = [&](const std::vector<double>& a, double b,
                          bool equality) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += a[i] * best[i];
      if (equality || std::abs(dot - b) <= 2.0 * slack_allow + 1e-9) {
        normals.push_back(a);
      }
    };
    for (const auto& [a, b] : piece.equalities) add_active(a, b, true);
    for (const auto& [a, b] : piece.inequalities) add_active(a, b, false);
    // orthonormalize the normals, then project coordinate differences
    std::vector<std::vector<double>> ortho;
    for (auto v : normals) {
      for (const auto& u : ortho) {
        double d = 0.0;
        for (int i = 0; i < n; ++i) d += v[i] * u[i];
        for (int i = 0; i < n; ++i) v[i] -= d * u[i];
      }
      double norm = 0.0;
      for (double x : v) norm += x * x;
      if (norm > 1e-18) {
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
        ortho.push_back(std::move(v));
      }
    }
    std::vector<std::vector<double>> tangents;
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<double> v(n, 0.0);
      v[i] = 1.0;
      v[n - 1] = -1.0;
      for (const auto& u : ortho) {
        double d = 0.0;
        for (int j = 0; j < n; ++j) d += v[j] * u[j];
        for (int j = 0; j < n; ++j) v[j] -= d * u[j];
      }
      for (const auto& u : tangents) {
        double d = 0.0;
        for (int j = 0; j < n; ++j) d += v[j] * u[j];
        for (int j = 0; j < n; ++j) v[j] -= d * u[j];
      }
      double norm = 0.0;
      for (double x : v) norm += x * x;
      if (norm > 1e-14) {
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
        tangents.push_back(std::move(v));
      }
    }
    if (!tangents.empty()) {
      std::vector<double> x = best.weights();
      auto piece_ok = [&](const std::vector<double>& y) {
        for (double v : y) {
          if (v < -1e-12) return false;
        }
        return piece_slack(piece, validate(y)) <= slack_allow + 1e-12;
      };
      auto value_at = [&](const std::vector<double>& y) {
        return evaluate(spec, prior, validate(y)).value;
      };
      double fx = value_at(x);
      for (int cycle = 0; cycle < 60; ++cycle) {
        bool moved = false;
        for (const auto& dir : tangents) {
          // step range from coordinate bounds
          double t_lo = -1.0, t_hi = 1.0;
          for (int i = 0; i < n; ++i) {
            if (dir[i] > 1e-14) t_lo = std::max(t_lo, -x[i] / dir[i]);
            if (dir[i] < -1e-14) t_hi = std::min(t_hi, -x[i] / dir[i]);
          }
          // shrink onto the allowed slack band
          auto at = [&](double t) {
            std::vector<double> y(x);
            for (int i = 0; i < n; ++i) y[i] += t * dir[i];
            return y;
          };
          while (t_hi > 0 && !piece_ok(at(t_hi))) t_hi *= 0.5;
          while (t_lo < 0 && !piece_ok(at(t_lo))) t_lo *= 0.5;
          if (t_hi - t_lo < 1e-14) continue;
          const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
          double a = t_lo, b = t_hi;
          double c = b - gr * (b - a), d = a + gr * (b - a);
          double fc = value_at(at(c)), fd = value_at(at(d));
          for (int it = 0; it < 80; ++it) {
            if (fc < fd) {
              b = d;
              d = c;
              fd = fc;
              c = b - gr * (b - a);
              fc = value_at(at(c));
            } else {
              a = c;
              c = d;
              fc = fd;
              d = a + gr * (b - a);
              fd = value_at(at(d));
            }
          }
          const double t_star = 0.5 * (a + b);
          const std::vector<double> y = at(t_star);
          const double fy = value_at(y);
          if (fy < fx - 1e-15 && piece_ok(y)) {
            x = y;
            fx = fy;
            moved = true;
          }
        }
        if (!moved) break;
      }
      const Belief slid = validate(x);
      const double slid_obj = evaluate(spec, prior, slid).value;
      if (piece_slack(piece, slid) <= slack_allow + 1e-12 &&
          oracle_better(slid_obj, slid, best_obj, best)) {
        best = slid;
        best_obj = slid_obj;
      }
    }
    return best;
  };

  bool have_best = false;
  Belief best;
  double best_obj = kInf;
  auto consider = [&](const Belief& x) {
    const double obj = evaluate(spec, prior, x).value;
    if (!have_best || oracle_better(obj, x, best_obj, best)) {
      have_best = true;
      best = x;
      best_obj = obj;
    }
  };

  const double base_slack = 1.5 / k;
  for (const auto& piece : info.pieces()) {
    if (piece.form.kind == PieceForm::Kind::Point) {
      consider(*piece.form.point);
      continue;
    }
    if (is_empty(piece)) continue;
    // coarse scan: best qualifying grid point, else the nearest one
    bool qualified = false, seeded = false;
    Belief seed;
    double seed_obj = kInf, seed_slack = kInf;
    for_each_grid_point(n, k, [&](const Belief& x) {
      const double s = piece_slack(piece, x);
      if (s <= base_slack) {
        const double obj = evaluate(spec, prior, x).value;
        if (!qualified || oracle_better(obj, x, seed_obj, seed)) {
          qualified = true;
          seeded = true;
          seed = x;
          seed_obj = obj;
        }
      } else if (!qualified && (!seeded || s < seed_slack)) {
        seeded = true;
        seed = x;
        seed_slack = s;
      }
    });
    if (!seeded) continue;
    consider(refine_on_piece(piece, seed));
  }
  if (!have_best) {
    throw Error(ErrorCode::SolverFailure,
                "oracle found no candidate near the information set");
  }
  return best;
}

}  // namespace inertia
