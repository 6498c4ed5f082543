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

#include "inertia/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>

namespace inertia {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSigmaOneTol = 1e-9;
constexpr double kDefaultConcavityRange = 16.0;
constexpr int kConcavitySamples = 128;
}  // namespace

struct DivergenceSpec::Impl {
  DivergenceKind kind = DivergenceKind::KL;
  std::string name = "kl";
  double alpha = 0.0;
  double shift = 0.0;  // subtracted so sigma(1) = 0
  ScalarFn user_sigma, user_sigma_prime, user_sigma_second;
  std::vector<ScalarFn> h;  // HBayesian distortions
  bool skip_concavity_check = false;

  mutable std::mutex check_mutex;
  mutable double checked_range = 0.0;

  double sigma(double x) const {
    switch (kind) {
      case DivergenceKind::KL:
        return std::log(x);
      case DivergenceKind::Alpha:
        return x <= 0.0 ? -1.0 / alpha : (std::pow(x, alpha) - 1.0) / alpha;
      default:
        return user_sigma(x) - shift;
    }
  }
  double sigma_prime(double x) const {
    switch (kind) {
      case DivergenceKind::KL:
        return 1.0 / x;
      case DivergenceKind::Alpha:
        return std::pow(x, alpha - 1.0);
      default:
        return user_sigma_prime(x);
    }
  }
  double sigma_second(double x) const {
    switch (kind) {
      case DivergenceKind::KL:
        return -1.0 / (x * x);
      case DivergenceKind::Alpha:
        return (alpha - 1.0) * std::pow(x, alpha - 2.0);
      default:
        return user_sigma_second(x);
    }
  }

  void check_concavity(double up_to) const {
    if (kind == DivergenceKind::KL || kind == DivergenceKind::Alpha ||
        kind == DivergenceKind::Euclidean || skip_concavity_check) {
      return;
    }
    std::lock_guard<std::mutex> lock(check_mutex);
    if (up_to <= checked_range) return;
    // log-spaced samples in (0, up_to]
    const double lo = 1e-6;
    for (int i = 0; i < kConcavitySamples; ++i) {
      const double t = static_cast<double>(i) / (kConcavitySamples - 1);
      const double x = lo * std::pow(up_to / lo, t);
      const double s2 = sigma_second(x);
      if (!(s2 < 0.0)) {
        throw Error(ErrorCode::BadInput,
                    "generator is not strictly concave at x=" +
                        std::to_string(x) + " (sigma''=" + std::to_string(s2) +
                        ")");
      }
    }
    checked_range = up_to;
  }
};

DivergenceSpec::DivergenceSpec(std::shared_ptr<Impl> impl)
    : impl_(std::move(impl)) {}

DivergenceSpec DivergenceSpec::kl() {
  auto impl = std::make_shared<Impl>();
  impl->kind = DivergenceKind::KL;
  impl->name = "kl";
  return DivergenceSpec(impl);
}

DivergenceSpec DivergenceSpec::alpha(double a) {
  if (!(a >= 0.0 && a < 1.0)) {
    throw Error(ErrorCode::BadInput, "alpha must lie in [0,1)");
  }
  if (a == 0.0) return kl();  // the alpha -> 0 member is KL itself
  auto impl = std::make_shared<Impl>();
  impl->kind = DivergenceKind::Alpha;
  impl->alpha = a;
  impl->name = "alpha(" + std::to_string(a) + ")";
  return DivergenceSpec(impl);
}

DivergenceSpec DivergenceSpec::euclidean() {
  auto impl = std::make_shared<Impl>();
  impl->kind = DivergenceKind::Euclidean;
  impl->name = "euclidean";
  return DivergenceSpec(impl);
}

namespace {
std::shared_ptr<DivergenceSpec::Impl> make_f_impl(const std::string& name,
                                                  ScalarFn s, ScalarFn sp,
                                                  ScalarFn spp, bool checked) {
  auto impl = std::make_shared<DivergenceSpec::Impl>();
  impl->kind = DivergenceKind::FGenerator;
  impl->name = name;
  impl->user_sigma = std::move(s);
  impl->user_sigma_prime = std::move(sp);
  impl->user_sigma_second = std::move(spp);
  impl->shift = impl->user_sigma(1.0);
  impl->skip_concavity_check = !checked;
  return impl;
}
}  // namespace

DivergenceSpec DivergenceSpec::f_generator(const std::string& name,
                                           ScalarFn sigma, ScalarFn sigma_prime,
                                           ScalarFn sigma_second) {
  auto impl = make_f_impl(name, std::move(sigma), std::move(sigma_prime),
                          std::move(sigma_second), true);
  impl->check_concavity(kDefaultConcavityRange);
  if (std::abs(impl->sigma(1.0)) > kSigmaOneTol) {
    throw Error(ErrorCode::BadInput, "generator shift failed: sigma(1) != 0");
  }
  return DivergenceSpec(impl);
}

DivergenceSpec DivergenceSpec::f_generator_unchecked(const std::string& name,
                                                     ScalarFn sigma,
                                                     ScalarFn sigma_prime,
                                                     ScalarFn sigma_second) {
  return DivergenceSpec(make_f_impl(name, std::move(sigma),
                                    std::move(sigma_prime),
                                    std::move(sigma_second), false));
}

DivergenceSpec DivergenceSpec::h_bayesian_power(double rho,
                                                std::vector<double> psi) {
  if (rho <= 0.0) {
    throw Error(ErrorCode::BadInput, "h_bayesian rho must be positive");
  }
  for (double p : psi) {
    if (!(p > 0.0)) {
      throw Error(ErrorCode::BadInput, "h_bayesian psi must be positive");
    }
  }
  std::vector<ScalarFn> h;
  h.reserve(psi.size());
  for (double p : psi) {
    h.push_back([p, rho](double t) { return p * std::pow(t, rho); });
  }
  return h_bayesian(
      std::move(h), [](double x) { return std::log(x); },
      [](double x) { return 1.0 / x; },
      [](double x) { return -1.0 / (x * x); },
      "h_bayesian(rho=" + std::to_string(rho) + ")");
}

DivergenceSpec DivergenceSpec::h_bayesian(std::vector<ScalarFn> h,
                                          ScalarFn sigma, ScalarFn sigma_prime,
                                          ScalarFn sigma_second,
                                          const std::string& name) {
  auto impl = make_f_impl(name, std::move(sigma), std::move(sigma_prime),
                          std::move(sigma_second), true);
  impl->kind = DivergenceKind::HBayesian;
  impl->h = std::move(h);
  impl->check_concavity(kDefaultConcavityRange);
  // h_i(t) > 0 for t > 0, spot-checked
  for (const auto& hi : impl->h) {
    for (double t : {1e-6, 1e-3, 0.1, 0.5, 1.0}) {
      if (!(hi(t) > 0.0)) {
        throw Error(ErrorCode::BadInput, "h_i(t) must be positive for t > 0");
      }
    }
  }
  return DivergenceSpec(impl);
}

DivergenceKind DivergenceSpec::kind() const { return impl_->kind; }
const std::string& DivergenceSpec::name() const { return impl_->name; }

bool DivergenceSpec::is_bayesian() const {
  switch (impl_->kind) {
    case DivergenceKind::KL:
    case DivergenceKind::Alpha:
    case DivergenceKind::FGenerator:
      return true;
    default:
      return false;
  }
}

double DivergenceSpec::alpha_param() const { return impl_->alpha; }
double DivergenceSpec::sigma_shift() const { return impl_->shift; }
double DivergenceSpec::sigma(double x) const { return impl_->sigma(x); }
double DivergenceSpec::sigma_prime(double x) const {
  return impl_->sigma_prime(x);
}
double DivergenceSpec::sigma_second(double x) const {
  return impl_->sigma_second(x);
}

std::vector<double> DivergenceSpec::effective_weights(
    const Belief& prior) const {
  std::vector<double> w(prior.weights());
  if (impl_->kind == DivergenceKind::HBayesian) {
    if (impl_->h.size() != w.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "h_bayesian distortion count differs from state count");
    }
    for (size_t i = 0; i < w.size(); ++i) w[i] = impl_->h[i](prior[static_cast<int>(i)]);
  }
  return w;
}

EvalResult evaluate(const DivergenceSpec& spec, const Belief& prior,
                    const Belief& pi) {
  if (!prior.full_support()) {
    throw Error(ErrorCode::PriorNotFullSupport,
                "evaluate requires a full-support prior");
  }
  if (prior.size() != pi.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "prior and pi have different dimensions");
  }
  const int n = prior.size();
  EvalResult res;
  res.gradient.assign(n, 0.0);
  res.finite.assign(n, true);

  if (spec.kind() == DivergenceKind::Euclidean) {
    double v = 0.0;
    for (int i = 0; i < n; ++i) {
      const double diff = pi[i] - prior[i];
      v += diff * diff;
      res.gradient[i] = 2.0 * diff;
    }
    res.value = v;
    return res;
  }

  const std::vector<double> w = spec.effective_weights(prior);
  double min_w = kInf;
  for (double wi : w) min_w = std::min(min_w, wi);
  spec.impl_->check_concavity(std::max(kDefaultConcavityRange, 1.0 / min_w));

  double v = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = pi[i] / w[i];
    double s, sp;
    if (pi[i] <= 0.0) {
      // right-limit convention at 0
      s = (spec.kind() == DivergenceKind::KL) ? -kInf : spec.sigma(0.0);
      sp = (spec.kind() == DivergenceKind::KL) ? kInf : spec.sigma_prime(0.0);
    } else {
      s = spec.sigma(x);
      sp = spec.sigma_prime(x);
    }
    v -= w[i] * s;
    res.gradient[i] = -sp;
    res.finite[i] = std::isfinite(sp);
  }
  res.value = v;
  return res;
}

double gradient_check(const DivergenceSpec& spec, const Belief& prior,
                      const Belief& pi, double step) {
  const int n = pi.size();
  for (int i = 0; i < n; ++i) {
    if (pi[i] <= step) {
      throw Error(ErrorCode::BadInput,
                  "gradient_check needs pi interior relative to the step");
    }
  }
  const EvalResult at = evaluate(spec, prior, pi);
  double max_dev = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    // direction e_i - e_{n-1}
    std::vector<double> up = pi.weights(), dn = pi.weights();
    up[i] += step;
    up[n - 1] -= step;
    dn[i] -= step;
    dn[n - 1] += step;
    const double f_up = evaluate(spec, prior, validate(up)).value;
    const double f_dn = evaluate(spec, prior, validate(dn)).value;
    const double numeric = (f_up - f_dn) / (2.0 * step);
    const double analytic = at.gradient[i] - at.gradient[n - 1];
    max_dev = std::max(max_dev, std::abs(numeric - analytic));
  }
  return max_dev;
}

namespace {

Belief random_belief(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> exp_dist(1.0);
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& x : w) {
    x = exp_dist(rng) + 1e-9;
    sum += x;
  }
  for (double& x : w) x /= sum;
  return validate(w);
}

}  // namespace

DistanceReport is_distance_function(const DivergenceSpec& spec,
                                    const Belief& prior, int m,
                                    std::uint64_t seed) {
  if (m < 1) throw Error(ErrorCode::BadInput, "sample count must be >= 1");
  DistanceReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const int n = prior.size();
  const double d_mu = evaluate(spec, prior, prior).value;

  report.samples = m;
  for (int t = 0; t < m; ++t) {
    const Belief pi = random_belief(rng, n);
    if (linf_distance(pi, prior) < 1e-9) continue;
    const double d_pi = evaluate(spec, prior, pi).value;
    if (!(d_mu < d_pi)) {
      report.violations.push_back(
          {"uniqueness", prior, pi, d_mu, d_pi});
    }
  }

  auto mix = [&](const Belief& a, const Belief& b, double t) {
    std::vector<double> w(a.size());
    for (int i = 0; i < a.size(); ++i) w[i] = (1 - t) * a[i] + t * b[i];
    return validate(w);
  };

  const int pairs = std::max(1, m / 5);
  report.pairs = pairs;
  for (int t = 0; t < pairs; ++t) {
    Belief x = random_belief(rng, n);
    Belief y = random_belief(rng, n);
    double dx = evaluate(spec, prior, x).value;
    double dy = evaluate(spec, prior, y).value;
    if (dx > dy) {
      std::swap(x, y);
      std::swap(dx, dy);
    }
    // walk from the prior toward y until equidistant with x
    if (linf_distance(x, prior) < 1e-9) continue;
    double lo = 0.0, hi = 1.0;
    if (evaluate(spec, prior, mix(prior, y, 1.0)).value < dx - 1e-12) continue;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (evaluate(spec, prior, mix(prior, y, mid)).value < dx) lo = mid;
      else hi = mid;
    }
    const Belief z = mix(prior, y, hi);
    const double dz = evaluate(spec, prior, z).value;
    if (std::abs(dz - dx) > 1e-9) continue;
    if (linf_distance(x, z) < 1e-7) continue;
    bool strictly_closer = false;
    for (int g = 1; g < 64 && !strictly_closer; ++g) {
      const double a = static_cast<double>(g) / 64.0;
      const double dm = evaluate(spec, prior, mix(x, z, a)).value;
      strictly_closer = dm < std::min(dx, dz) - 1e-12;
    }
    if (!strictly_closer) {
      report.violations.push_back({"mixture", x, z, dx, dz});
    }
  }
  return report;
}

}  // namespace inertia
