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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "inertia/errors.hpp"

namespace inertia {

// Internal renormalization tolerance; drift up to this much is silently fixed.
inline constexpr double kSimplexEps = 1e-12;
// User-facing rejection threshold: inputs further than this from the simplex
// are treated as errors, not drift.
inline constexpr double kNormalizationRejectTol = 1e-6;

// Finite set of states, optionally with a numeric payoff value per state
// (values in [0,1], used by the exchange/persuasion applications).
class StateSpace {
 public:
  StateSpace(std::vector<std::string> labels,
             std::optional<std::vector<double>> values = std::nullopt);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_values() const { return values_.has_value(); }
  const std::vector<double>& values() const;
  // Index of a label; throws BadInput if absent.
  int index_of(const std::string& label) const;

  static StateSpace default_labels(int n);

 private:
  std::vector<std::string> labels_;
  std::optional<std::vector<double>> values_;
};

// A point in the probability simplex. Construct through validate(); weights
// are clamped/renormalized so that min >= 0 and |sum - 1| <= kSimplexEps.
class Belief {
 public:
  Belief() = default;

  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  bool full_support() const { return full_support_; }

  double mass(const std::vector<int>& event) const;

  friend Belief validate(const std::vector<double>& weights);

 private:
  std::vector<double> weights_;
  bool full_support_ = false;
};

// Validates raw weights into a Belief.
// Throws NegativeMass if any entry < -kSimplexEps, NotNormalized if
// |sum - 1| > kNormalizationRejectTol before renormalization.
Belief validate(const std::vector<double>& weights);

// Strict lexicographic order: true iff a precedes b, where the first
// differing coordinate decides and the larger weight sorts first.
// Total and irreflexive on distinct beliefs; throws DimensionMismatch.
bool lex_less(const Belief& a, const Belief& b);

// Enumerates all beliefs with weights that are integer multiples of 1/k, in
// a fixed order (first coordinate descending, then recursively). The count
// is C(k+n-1, n-1).
void for_each_grid_point(int n, int k,
                         const std::function<void(const Belief&)>& fn);
std::vector<Belief> grid(int n, int k);
std::uint64_t grid_size(int n, int k);

double linf_distance(const Belief& a, const Belief& b);

}  // namespace inertia
