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

#include "inertia/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace inertia {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PriorNotFullSupport: return "PriorNotFullSupport";
    case ErrorCode::EmptyEvent: return "EmptyEvent";
    case ErrorCode::InfeasibleAlpha: return "InfeasibleAlpha";
    case ErrorCode::InfeasibleAlphas: return "InfeasibleAlphas";
    case ErrorCode::BadBounds: return "BadBounds";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::EmptyInfoSet: return "EmptyInfoSet";
    case ErrorCode::PieceOverflow: return "PieceOverflow";
    case ErrorCode::NotBayesianKind: return "NotBayesianKind";
    case ErrorCode::MissingEventMessage: return "MissingEventMessage";
    case ErrorCode::NoPositiveSolution: return "NoPositiveSolution";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::NegativeClaim: return "NegativeClaim";
    case ErrorCode::NotThreeStates: return "NotThreeStates";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

StateSpace::StateSpace(std::vector<std::string> labels,
                       std::optional<std::vector<double>> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (labels_.size() < 2) {
    throw Error(ErrorCode::BadInput, "state space needs at least 2 states");
  }
  std::set<std::string> distinct(labels_.begin(), labels_.end());
  if (distinct.size() != labels_.size()) {
    throw Error(ErrorCode::BadInput, "state labels must be distinct");
  }
  if (values_) {
    if (values_->size() != labels_.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "values length differs from labels length");
    }
    for (double v : *values_) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::BadInput, "state values must lie in [0,1]");
      }
    }
  }
}

const std::vector<double>& StateSpace::values() const {
  if (!values_) {
    throw Error(ErrorCode::BadInput, "state space has no payoff values");
  }
  return *values_;
}

int StateSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw Error(ErrorCode::BadInput, "unknown state label '" + label + "'");
}

StateSpace StateSpace::default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
  return StateSpace(std::move(labels));
}

double Belief::mass(const std::vector<int>& event) const {
  double total = 0.0;
  for (int i : event) total += weights_[i];
  return total;
}

Belief validate(const std::vector<double>& weights) {
  if (weights.size() < 2) {
    throw Error(ErrorCode::BadInput, "belief needs at least 2 coordinates");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::BadInput, "belief weights must be finite");
    }
    if (w < -kSimplexEps) {
      throw Error(ErrorCode::NegativeMass,
                  "weight " + std::to_string(w) + " is negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kNormalizationRejectTol) {
    throw Error(ErrorCode::NotNormalized,
                "weights sum to " + std::to_string(sum));
  }
  Belief b;
  b.weights_.resize(weights.size());
  double clamped_sum = 0.0;
  for (size_t i = 0; i < weights.size(); ++i) {
    b.weights_[i] = std::max(weights[i], 0.0);
    clamped_sum += b.weights_[i];
  }
  // renormalize only when the drift exceeds the internal tolerance, so exact
  // user inputs pass through bit-identically
  if (std::abs(clamped_sum - 1.0) > kSimplexEps) {
    for (double& w : b.weights_) w /= clamped_sum;
  }
  b.full_support_ = std::all_of(b.weights_.begin(), b.weights_.end(),
                                [](double w) { return w > 0.0; });
  return b;
}

bool lex_less(const Belief& a, const Belief& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "beliefs have different dimensions");
  }
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void grid_rec(int k_left, int coord, std::vector<int>& counts, int k,
              const std::function<void(const Belief&)>& fn) {
  const int n = static_cast<int>(counts.size());
  if (coord == n - 1) {
    counts[coord] = k_left;
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = static_cast<double>(counts[i]) / k;
    fn(validate(w));
    return;
  }
  for (int m = k_left; m >= 0; --m) {
    counts[coord] = m;
    grid_rec(k_left - m, coord + 1, counts, k, fn);
  }
}

}  // namespace

void for_each_grid_point(int n, int k,
                         const std::function<void(const Belief&)>& fn) {
  if (n < 2 || k < 1) {
    throw Error(ErrorCode::BadInput, "grid needs n >= 2 and k >= 1");
  }
  std::vector<int> counts(n, 0);
  grid_rec(k, 0, counts, k, fn);
}

std::vector<Belief> grid(int n, int k) {
  std::vector<Belief> out;
  out.reserve(grid_size(n, k));
  for_each_grid_point(n, k, [&](const Belief& b) { out.push_back(b); });
  return out;
}

std::uint64_t grid_size(int n, int k) {
  // C(k+n-1, n-1)
  std::uint64_t result = 1;
  for (int i = 1; i <= n - 1; ++i) {
    result = result * (k + i) / i;
  }
  return result;
}

double linf_distance(const Belief& a, const Belief& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "beliefs have different dimensions");
  }
  double d = 0.0;
  for (int i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace inertia
