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
#include <memory>
#include <string>
#include <vector>

#include "inertia/simplex.hpp"

namespace inertia {

using ScalarFn = std::function<double(double)>;

enum class DivergenceKind { KL, Alpha, FGenerator, HBayesian, Euclidean };

struct EvalResult {
  double value = 0.0;             // +inf allowed (e.g. KL against a zero)
  std::vector<double> gradient;   // d value / d pi_i
  std::vector<bool> finite;       // per-coordinate gradient finiteness
};

// A subjective distance d_mu(pi), immutable after construction.
//
// The generator-based kinds evaluate -sum_i w_i * sigma(pi_i / w_i) with
// w = prior weights (KL, Alpha, FGenerator) or w_i = h_i(mu_i) (HBayesian).
// User-supplied generators are shifted so sigma(1) = 0 and spot-checked for
// strict concavity (128 samples; the checked range is extended on demand to
// cover 1/min_i mu_i when a prior requires it).
class DivergenceSpec {
 public:
  static DivergenceSpec kl();
  static DivergenceSpec alpha(double a);  // sigma(x) = (x^a - 1)/a, a in [0,1)
  static DivergenceSpec euclidean();
  static DivergenceSpec f_generator(const std::string& name, ScalarFn sigma,
                                    ScalarFn sigma_prime,
                                    ScalarFn sigma_second);
  // Skips the concavity check; for deliberately broken test specs.
  static DivergenceSpec f_generator_unchecked(const std::string& name,
                                              ScalarFn sigma,
                                              ScalarFn sigma_prime,
                                              ScalarFn sigma_second);
  // h_i(t) = psi_i * t^rho applied to the prior weight, with sigma = ln.
  static DivergenceSpec h_bayesian_power(double rho, std::vector<double> psi);
  static DivergenceSpec h_bayesian(std::vector<ScalarFn> h, ScalarFn sigma,
                                   ScalarFn sigma_prime, ScalarFn sigma_second,
                                   const std::string& name = "h_bayesian");

  DivergenceKind kind() const;
  const std::string& name() const;
  // True for the family closed under proportional (Jeffrey-style) updates on
  // alpha-events: KL, Alpha, FGenerator. HBayesian and Euclidean are not.
  bool is_bayesian() const;
  double alpha_param() const;  // Alpha kind only
  // Constant subtracted from the user generator so that sigma(1) = 0.
  double sigma_shift() const;

  double sigma(double x) const;
  double sigma_prime(double x) const;
  double sigma_second(double x) const;

  // Effective per-coordinate weights: the prior itself for Bayesian kinds,
  // h_i(mu_i) for HBayesian. Not meaningful for Euclidean.
  std::vector<double> effective_weights(const Belief& prior) const;

  struct Impl;  // defined in the implementation file

 private:
  explicit DivergenceSpec(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;

  friend EvalResult evaluate(const DivergenceSpec&, const Belief&,
                             const Belief&);
};

// Value and gradient of d_prior(pi). Throws PriorNotFullSupport.
EvalResult evaluate(const DivergenceSpec& spec, const Belief& prior,
                    const Belief& pi);

// Max deviation between the analytic gradient and central finite differences
// along the simplex tangent directions e_i - e_n. pi must be interior.
double gradient_check(const DivergenceSpec& spec, const Belief& prior,
                      const Belief& pi, double step);

struct DistanceViolation {
  std::string property;  // "uniqueness" (ii) or "mixture" (i)
  Belief a;
  Belief b;
  double value_a = 0.0;
  double value_b = 0.0;
};

struct DistanceReport {
  std::uint64_t seed = 0;
  int samples = 0;
  int pairs = 0;
  std::vector<DistanceViolation> violations;
  bool pass() const { return violations.empty(); }
};

// Samples the two defining distance-function properties:
//  (ii) d(mu) < d(pi) for m random pi != mu;
//  (i)  for equidistant pairs (engineered by bisection along rays from the
//       prior, tie within 1e-9), some mixture on a 1/64 grid is strictly
//       closer.
DistanceReport is_distance_function(const DivergenceSpec& spec,
                                    const Belief& prior, int m,
                                    std::uint64_t seed = 0);

}  // namespace inertia
