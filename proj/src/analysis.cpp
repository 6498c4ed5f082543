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

#include "inertia/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace inertia {

namespace {

Belief random_interior_belief(std::mt19937_64& rng, int n, double floor = 0.02) {
  std::uniform_real_distribution<double> uni(floor, 1.0);
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& x : w) {
    x = uni(rng);
    sum += x;
  }
  for (double& x : w) x /= sum;
  return validate(w);
}

// Random nonempty subset of {0..n-1} \ excluded, size in [1, max_size].
std::vector<int> random_subset(std::mt19937_64& rng,
                               const std::vector<int>& pool, int max_size) {
  std::vector<int> shuffled = pool;
  for (size_t i = shuffled.size(); i > 1; --i) {
    std::uniform_int_distribution<size_t> pick(0, i - 1);
    std::swap(shuffled[i - 1], shuffled[pick(rng)]);
  }
  std::uniform_int_distribution<int> size_pick(
      1, std::min<int>(max_size, static_cast<int>(shuffled.size())));
  shuffled.resize(size_pick(rng));
  std::sort(shuffled.begin(), shuffled.end());
  return shuffled;
}

std::string describe_event(const std::vector<int>& e) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << "}";
  return out.str();
}

std::vector<int> complement_of(int n, const std::vector<int>& used) {
  std::vector<bool> taken(n, false);
  for (int s : used) taken[s] = true;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (!taken[i]) rest.push_back(i);
  }
  return rest;
}

}  // namespace

PropertyReport check_extended_bayes(const DivergenceSpec& spec,
                                    const Belief& prior, int trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::BadInput, "trials must be >= 1");
  PropertyReport report;
  report.property = "extended_bayes";
  report.seed = seed;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  const int n = prior.size();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  UpdateOptions opt;
  opt.disable_closed_forms = true;

  for (int t = 0; t < trials; ++t) {
    const std::vector<int> event = random_subset(rng, all, n - 1);
    std::uniform_real_distribution<double> uni(0.02, 0.98);
    const double alpha = (t % 10 == 9) ? 1.0 : uni(rng);
    const InfoSet info = alpha_event(n, event, alpha);
    const UpdateResult got = update(spec, prior, info, opt);
    ++report.tested;

    // proportional reference (identical result for every Bayesian kind)
    const Belief ref =
        closed_form_alpha_event(DivergenceSpec::kl(), prior, event, alpha);
    const double dev = linf_distance(got.posterior, ref);
    std::ostringstream inst;
    inst << "E=" << describe_event(event) << " alpha=" << alpha;
    if (dev > 1e-7) {
      report.violations.push_back({inst.str() + " [proportional]", 0.0, dev,
                                   dev});
      continue;
    }
    // within-event likelihood-ratio condition
    const double post_mass = got.posterior.mass(event);
    const double prior_mass = prior.mass(event);
    for (int s : event) {
      const double lhs = got.posterior[s] / post_mass;
      const double rhs = prior[s] / prior_mass;
      if (std::abs(lhs - rhs) > 1e-7) {
        report.violations.push_back(
            {inst.str() + " [likelihood ratio]", rhs, lhs,
             std::abs(lhs - rhs)});
        break;
      }
    }
  }
  return report;
}

namespace {

// Divergence value of the proportional posterior on the intersection of two
// alpha-events with disjoint events: exact, used by the scale checker.
double pair_objective(const DivergenceSpec& spec, const Belief& prior,
                      const std::vector<int>& e1, double a1,
                      const std::vector<int>& e2, double a2) {
  const Belief post =
      closed_form_disjoint_alpha_pair(spec, prior, e1, a1, e2, a2);
  return evaluate(spec, prior, post).value;
}

}  // namespace

PropertyReport check_scale_invariance(const DivergenceSpec& spec,
                                      const Belief& prior, int trials,
                                      std::uint64_t seed) {
  const int n = prior.size();
  if (n < 3) {
    throw Error(ErrorCode::BadInput,
                "scale invariance needs n >= 3 for a nonempty complement");
  }
  if (!spec.is_bayesian()) {
    throw Error(ErrorCode::NotBayesianKind,
                "scale invariance applies to generator-based divergences");
  }
  PropertyReport report;
  report.property = "scale_invariance";
  report.seed = seed;
  report.trials = trials;
  report.notes.push_back(
      "comparisons hold the total event mass equal on both sides");
  std::mt19937_64 rng(seed);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  // attempts that fail to produce a testable instance (no tie bracket, no
  // room for a complement) do not count against the requested trials
  const int max_attempts = 10 * trials;
  for (int t = 0; t < max_attempts && report.tested < trials; ++t) {
    // disjoint events with a nonempty complement
    const std::vector<int> e1 = random_subset(rng, all, n - 2);
    const std::vector<int> rest = complement_of(n, e1);
    if (static_cast<int>(rest.size()) < 2) {
      ++report.skipped;
      continue;
    }
    const std::vector<int> e2 =
        random_subset(rng, rest, static_cast<int>(rest.size()) - 1);

    std::uniform_real_distribution<double> total_pick(0.15, 0.85);
    const double total = total_pick(rng);
    std::uniform_real_distribution<double> part(0.02, total - 0.02);
    const double a1 = part(rng);
    const double a2 = total - a1;
    std::uniform_real_distribution<double> lam_pick(0.2, 0.95);
    const double lam = lam_pick(rng);

    const double d_a = pair_objective(spec, prior, e1, a1, e2, a2);

    double b1;
    const bool near_tie_trial = (t % 2 == 1);
    if (near_tie_trial) {
      // engineer d(b) = d(a) by bisecting b1 at fixed total mass
      auto f = [&](double x) {
        return pair_objective(spec, prior, e1, x, e2, total - x) - d_a;
      };
      double lo = 0.02, hi = total - 0.02, found = -1.0;
      const int grid = 200;
      double prev = f(lo);
      for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double cur = f(x);
        if (prev * cur <= 0.0 && std::abs(x - a1) > 1e-4) {
          double xl = lo + (hi - lo) * (i - 1) / grid, xr = x;
          for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (xl + xr);
            (f(xl) * f(mid) <= 0.0 ? xr : xl) = mid;
          }
          found = 0.5 * (xl + xr);
          break;
        }
        prev = cur;
      }
      if (found < 0.0 || std::abs(f(found)) > 1e-11 ||
          std::abs(found - a1) < 1e-6) {
        ++report.skipped;
        continue;
      }
      b1 = found;
    } else {
      b1 = part(rng);
    }
    const double b2 = total - b1;
    const double d_b = pair_objective(spec, prior, e1, b1, e2, b2);
    const double d_la = pair_objective(spec, prior, e1, lam * a1, e2, lam * a2);
    const double d_lb = pair_objective(spec, prior, e1, lam * b1, e2, lam * b2);
    ++report.tested;

    std::ostringstream inst;
    inst << "E1=" << describe_event(e1) << " E2=" << describe_event(e2)
         << " a=(" << a1 << "," << a2 << ") b=(" << b1 << "," << b2
         << ") lambda=" << lam;
    const double diff = d_a - d_b;
    const double scaled = d_la - d_lb;
    if (std::abs(diff) <= 1e-10) {
      // ties must stay ties under scaling
      if (std::abs(scaled) > 1e-6) {
        report.violations.push_back(
            {inst.str() + " [tie broken by scaling]", 0.0, scaled,
             std::abs(scaled)});
      }
    } else if (std::abs(diff) > 1e-9 && std::abs(scaled) > 1e-9 &&
               (diff > 0) != (scaled > 0)) {
      report.violations.push_back(
          {inst.str() + " [preference flipped]", diff, scaled,
           std::abs(scaled)});
    }
  }
  return report;
}

PropertyReport check_iie(const DivergenceSpec& spec, const Belief& prior,
                         int trials, std::uint64_t seed) {
  const int n = prior.size();
  if (n < 3) throw Error(ErrorCode::BadInput, "iie check needs n >= 3");
  PropertyReport report;
  report.property = "iie";
  report.seed = seed;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  for (int t = 0; t < trials; ++t) {
    std::vector<int> a = random_subset(rng, all, n - 2);
    const std::vector<int> rest = complement_of(n, a);
    if (static_cast<int>(rest.size()) < 2) {
      ++report.skipped;
      continue;
    }
    std::vector<int> b =
        random_subset(rng, rest, static_cast<int>(rest.size()) - 1);
    if (prior.mass(a) > prior.mass(b)) std::swap(a, b);
    if (std::abs(prior.mass(a) - prior.mass(b)) < 1e-9) {
      ++report.skipped;
      continue;
    }

    const InfoSet info = qualitative(n, a, b, 1.0);
    const UpdateResult got = update(spec, prior, info);
    if (got.method == UpdateMethod::PriorInSet) {
      ++report.skipped;
      continue;
    }
    ++report.tested;

    std::ostringstream inst;
    inst << "A=" << describe_event(a) << " B=" << describe_event(b);
    std::vector<bool> in_ab(n, false);
    for (int s : a) in_ab[s] = true;
    for (int s : b) in_ab[s] = true;
    bool flagged = false;
    for (int s = 0; s < n && !flagged; ++s) {
      if (in_ab[s]) continue;
      const double dev = std::abs(got.posterior[s] - prior[s]);
      if (dev > 1e-7) {
        report.violations.push_back(
            {inst.str() + " [off-block state " + std::to_string(s) + "]",
             prior[s], got.posterior[s], dev});
        flagged = true;
      }
    }
    if (flagged) continue;
    const double target = 0.5 * (prior.mass(a) + prior.mass(b));
    const double mass_a = got.posterior.mass(a);
    const double mass_b = got.posterior.mass(b);
    if (std::abs(mass_a - target) > 1e-7 || std::abs(mass_b - target) > 1e-7) {
      report.violations.push_back(
          {inst.str() + " [block masses]", target, mass_a,
           std::max(std::abs(mass_a - target), std::abs(mass_b - target))});
    }
  }
  return report;
}

std::optional<DisagreementWitness> find_disagreement(
    const DivergenceSpec& spec_a, const DivergenceSpec& spec_b,
    const Belief& prior, int budget, std::uint64_t seed) {
  const int n = prior.size();
  if (n < 3) throw Error(ErrorCode::BadInput, "disagreement needs n >= 3");
  std::mt19937_64 rng(seed);

  auto d_a = [&](const Belief& x) { return evaluate(spec_a, prior, x).value; };
  auto d_b = [&](const Belief& x) { return evaluate(spec_b, prior, x).value; };
  auto make_witness = [&](const Belief& x, const Belief& y,
                          int tried) -> DisagreementWitness {
    DisagreementWitness w;
    w.pi1 = x;
    w.pi2 = y;
    const InfoSet info = finite_set({x, y});
    w.chosen_a = update(spec_a, prior, info).posterior;
    w.chosen_b = update(spec_b, prior, info).posterior;
    w.d_a_pi1 = d_a(x);
    w.d_a_pi2 = d_a(y);
    w.d_b_pi1 = d_b(x);
    w.d_b_pi2 = d_b(y);
    w.instances_tried = tried;
    return w;
  };

  int tried = 0;
  // Phase 1: random pairs.
  for (int t = 0; t < budget / 2; ++t) {
    ++tried;
    const Belief x = random_interior_belief(rng, n);
    const Belief y = random_interior_belief(rng, n);
    const double da = d_a(x) - d_a(y);
    const double db = d_b(x) - d_b(y);
    if (std::abs(da) > 1e-9 && std::abs(db) > 1e-9 && (da > 0) != (db > 0)) {
      return make_witness(x, y, tried);
    }
  }
  // Phase 2: pairs equidistant under spec_a, nudged into opposite orderings.
  auto mix = [&](const Belief& from, const Belief& to, double t) {
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = (1 - t) * from[i] + t * to[i];
    return validate(w);
  };
  for (int t = 0; t < budget / 2; ++t) {
    ++tried;
    const Belief x = random_interior_belief(rng, n);
    const Belief y = random_interior_belief(rng, n);
    const double dax = d_a(x);
    if (d_a(y) < dax || dax <= d_a(prior) + 1e-12) continue;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (d_a(mix(prior, y, mid)) < dax ? lo : hi) = mid;
    }
    const double t_tie = hi;
    const Belief z = mix(prior, y, t_tie);
    const double db_gap = d_b(x) - d_b(z);
    if (std::abs(db_gap) < 1e-7) continue;
    // push z along the ray so that spec_a strictly prefers the side spec_b
    // rejects: if spec_b prefers z (db_gap > 0), make d_a(z') > d_a(x).
    const double dir = db_gap > 0 ? 1.0 : -1.0;
    for (double eps = 1e-6; eps < 0.2; eps *= 4.0) {
      const double t_try = t_tie + dir * eps;
      if (t_try <= 0.0 || t_try >= 1.0) break;
      const Belief z2 = mix(prior, y, t_try);
      const double da2 = dax - d_a(z2);
      const double db2 = d_b(x) - d_b(z2);
      if (std::abs(da2) > 1e-9 && std::abs(db2) > 1e-9 &&
          (da2 > 0) != (db2 > 0)) {
        return make_witness(x, z2, tried);
      }
    }
  }
  return std::nullopt;
}

PropertyReport check_comparative_statics(const DivergenceSpec& spec1,
                                         const DivergenceSpec& spec2,
                                         const Belief& prior, int trials,
                                         std::uint64_t seed) {
  const int n = prior.size();
  if (!spec1.is_bayesian() || !spec2.is_bayesian()) {
    throw Error(ErrorCode::NotBayesianKind,
                "comparative statics needs generator-based divergences");
  }
  PropertyReport report;
  report.property = "comparative_statics";
  report.seed = seed;
  report.trials = trials;

  // Verify sigma2 = h(sigma1) with h'' < 0 on a sampled range:
  // h' = s2'/s1', h'' = (s2'' s1' - s2' s1'') / s1'^3.
  {
    double min_mu = 1.0;
    for (int i = 0; i < n; ++i) min_mu = std::min(min_mu, prior[i]);
    const double x_hi = 1.0 / min_mu;
    for (int i = 0; i < 64; ++i) {
      const double x = 0.05 + (x_hi - 0.05) * i / 63.0;
      const double s1p = spec1.sigma_prime(x);
      const double h2 = (spec2.sigma_second(x) * s1p -
                         spec2.sigma_prime(x) * spec1.sigma_second(x)) /
                        (s1p * s1p * s1p);
      if (!(h2 < 0.0)) {
        throw Error(ErrorCode::BadInput,
                    "second generator is not a strictly concave transform of "
                    "the first at x=" +
                        std::to_string(x));
      }
    }
    std::ostringstream note;
    note << "transform concavity verified on x in [0.05, " << x_hi << "]";
    report.notes.push_back(note.str());
  }

  std::mt19937_64 rng(seed);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  if (n == 3) {
    // A, B, C exhaust the states; the event masses are pinned, so both
    // divergences land on the same posterior.
    report.notes.push_back("n=3: information is a singleton in event masses");
    for (int t = 0; t < trials; ++t) {
      std::uniform_real_distribution<double> uni(0.3, 0.95);
      const double alpha = uni(rng);
      const double beta = uni(rng);
      // pi({0}) is pinned at alpha+beta-1; need it strictly inside (0, min)
      const double gamma = alpha + beta - 1.0;
      if (gamma <= 0.01 || gamma >= std::min(alpha, beta) - 0.01) {
        ++report.skipped;
        continue;
      }
      const InfoSet info =
          intersect({alpha_event(n, {0, 1}, alpha), alpha_event(n, {0, 2}, beta)});
      const Belief p1 = update(spec1, prior, info).posterior;
      const Belief p2 = update(spec2, prior, info).posterior;
      ++report.tested;
      const double dev = linf_distance(p1, p2);
      if (dev > 1e-8) {
        report.violations.push_back({"n=3 coincidence", 0.0, dev, dev});
      }
    }
    return report;
  }

  if (n < 4) throw Error(ErrorCode::BadInput, "comparative statics needs n >= 4");

  for (int t = 0; t < trials; ++t) {
    const std::vector<int> a = random_subset(rng, all, n - 3);
    const std::vector<int> rest1 = complement_of(n, a);
    const std::vector<int> b =
        random_subset(rng, rest1, static_cast<int>(rest1.size()) - 2);
    std::vector<int> used = a;
    used.insert(used.end(), b.begin(), b.end());
    const std::vector<int> rest2 = complement_of(n, used);
    if (static_cast<int>(rest2.size()) < 2) {
      ++report.skipped;
      continue;
    }
    const std::vector<int> c =
        random_subset(rng, rest2, static_cast<int>(rest2.size()) - 1);

    std::uniform_real_distribution<double> uni(0.05, 0.9);
    const double alpha = uni(rng);
    const double beta = uni(rng);
    const double lo = std::max(0.0, alpha + beta - 1.0);
    const double hi = std::min(alpha, beta);
    if (hi - lo < 0.02 || alpha + beta > 0.98) {
      ++report.skipped;
      continue;
    }

    std::vector<int> ab = a, ac = a;
    ab.insert(ab.end(), b.begin(), b.end());
    ac.insert(ac.end(), c.begin(), c.end());
    std::sort(ab.begin(), ab.end());
    std::sort(ac.begin(), ac.end());
    InfoSet info = intersect({alpha_event(n, ab, alpha),
                              alpha_event(n, ac, beta)});
    const UpdateResult r1 = update(spec1, prior, info);
    if (r1.method == UpdateMethod::PriorInSet) {
      ++report.skipped;
      continue;
    }
    const Belief p1 = r1.posterior;
    const Belief p2 = update(spec2, prior, info).posterior;
    ++report.tested;

    std::ostringstream inst;
    inst << "A=" << describe_event(a) << " B=" << describe_event(b)
         << " C=" << describe_event(c) << " alpha=" << alpha
         << " beta=" << beta;
    for (int s : a) {
      if (p1[s] >= p2[s] + 1e-9) {
        report.violations.push_back(
            {inst.str() + " [state " + std::to_string(s) + " in A]", p2[s],
             p1[s], p1[s] - p2[s]});
        break;
      }
    }
    for (int s : ab) {
      if (std::find(a.begin(), a.end(), s) != a.end()) continue;
      if (p1[s] <= p2[s] - 1e-9) {
        report.violations.push_back(
            {inst.str() + " [state " + std::to_string(s) + " in B]", p2[s],
             p1[s], p2[s] - p1[s]});
        break;
      }
    }
    for (int s : ac) {
      if (std::find(a.begin(), a.end(), s) != a.end()) continue;
      if (p1[s] <= p2[s] - 1e-9) {
        report.violations.push_back(
            {inst.str() + " [state " + std::to_string(s) + " in C]", p2[s],
             p1[s], p2[s] - p1[s]});
        break;
      }
    }
  }
  return report;
}

double expected_sqrt_utility(const Belief& belief,
                             const std::vector<double>& consumption) {
  double eu = 0.0;
  for (int i = 0; i < belief.size(); ++i) {
    if (consumption[i] < 0.0) {
      throw Error(ErrorCode::BadInput, "consumption must be non-negative");
    }
    eu += belief[i] * std::sqrt(consumption[i]);
  }
  return eu;
}

std::optional<TradeResult> detect_speculative_trade(
    const ExchangeEconomy& economy, const InfoSet& info, double step,
    double max_transfer) {
  const int n = economy.prior.size();
  if (static_cast<int>(economy.endowment_a.size()) != n ||
      static_cast<int>(economy.endowment_b.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "endowment length differs from state count");
  }
  const Belief post_a = update(economy.divergence_a, economy.prior, info).posterior;
  const Belief post_b = update(economy.divergence_b, economy.prior, info).posterior;
  if (linf_distance(post_a, post_b) <= 1e-9) return std::nullopt;

  const double eu_a0 = expected_sqrt_utility(post_a, economy.endowment_a);
  const double eu_b0 = expected_sqrt_utility(post_b, economy.endowment_b);

  if (n != 3) {
    throw Error(ErrorCode::BadInput,
                "transfer grid search is implemented for 3 states");
  }
  // transfer t: A consumes e_a + t, B consumes e_b - t
  auto range = [&](int s) {
    const double lo = -std::min(max_transfer, economy.endowment_a[s]);
    const double hi = std::min(max_transfer, economy.endowment_b[s]);
    return std::pair<double, double>(lo, hi);
  };
  TradeResult best;
  double best_gain = 0.0;
  bool found = false;
  std::vector<double> fa(n), fb(n);
  const auto [lo0, hi0] = range(0);
  const auto [lo1, hi1] = range(1);
  const auto [lo2, hi2] = range(2);
  for (double t0 = lo0; t0 <= hi0 + 1e-12; t0 += step) {
    for (double t1 = lo1; t1 <= hi1 + 1e-12; t1 += step) {
      for (double t2 = lo2; t2 <= hi2 + 1e-12; t2 += step) {
        fa[0] = economy.endowment_a[0] + t0;
        fa[1] = economy.endowment_a[1] + t1;
        fa[2] = economy.endowment_a[2] + t2;
        fb[0] = economy.endowment_b[0] - t0;
        fb[1] = economy.endowment_b[1] - t1;
        fb[2] = economy.endowment_b[2] - t2;
        double eu_a = 0.0, eu_b = 0.0;
        for (int s = 0; s < 3; ++s) {
          eu_a += post_a[s] * std::sqrt(std::max(fa[s], 0.0));
          eu_b += post_b[s] * std::sqrt(std::max(fb[s], 0.0));
        }
        const double gain = std::min(eu_a - eu_a0, eu_b - eu_b0);
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best.allocation_a = fa;
          best.allocation_b = fb;
          best.eu_a_after = eu_a;
          best.eu_b_after = eu_b;
          found = true;
        }
      }
    }
  }
  if (!found || best_gain <= 1e-9) return std::nullopt;
  best.posterior_a = post_a;
  best.posterior_b = post_b;
  best.eu_a_before = eu_a0;
  best.eu_b_before = eu_b0;
  return best;
}

}  // namespace inertia
