// Copyright 2026 The crgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crgames/pu_activity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crgames/errors.hpp"
#include "crgames/single_type.hpp"
#include "crgames/specfun.hpp"

namespace crgames {

GEModel ge_derive(Prob p_t, Prob rho) {
  if (rho >= 1.0) {
    throw std::domain_error(
        "ge_derive: rho = 1 freezes the chain (no transitions)");
  }
  GEModel ge;
  ge.p_t = p_t;
  ge.rho = rho;
  ge.q = p_t * (1.0 - rho);
  ge.r = (1.0 - p_t) * (1.0 - rho);
  ge.n_on_bar = 1.0 / ge.r;
  return ge;
}

Prob pu_collision_prob(Prob p_su_t, const GEModel& ge) {
  return Prob::Clamped(std::min(1.0, p_su_t / ge.n_on_bar));
}

Prob p_su_t_fixedN(Prob p, int n) {
  if (n < 1) throw std::domain_error("p_su_t_fixedN: N < 1");
  return Prob::Clamped(-std::expm1(n * std::log1p(-p.value())));
}

std::optional<Prob> p_star_fixedN(int n, const CollisionBudget& budget) {
  if (n < 1) throw std::domain_error("p_star_fixedN: N < 1");
  if (budget.budget < 0.0) throw std::domain_error("p_star_fixedN: budget < 0");
  if (budget.budget >= 1.0) return std::nullopt;
  double p = -std::expm1(std::log1p(-budget.budget) / n);
  return Prob::Clamped(p);
}

ConstrainedOpt p_opt_constrained_fixedN(int n, int k_max,
                                        const CollisionBudget& budget) {
  if (n < 2) throw std::domain_error("p_opt_constrained_fixedN: N < 2");
  double unconstrained = p_opt_fixedN(n, k_max);
  auto limited = p_star_fixedN(n, budget);
  if (!limited.has_value() || *limited >= unconstrained) {
    return {unconstrained, false};
  }
  return {*limited, true};
}

PStarPoisson p_star_poisson(double lambda, const CollisionBudget& budget) {
  if (!(lambda > 0.0)) throw std::domain_error("p_star_poisson: lambda <= 0");
  if (budget.budget >= 1.0) return {false, 1.0, 1.0, 0.0};
  if (budget.budget < 0.0) throw std::domain_error("p_star_poisson: budget < 0");

  double log_keep = std::log1p(-budget.budget);  // ln(1 - budget)

  // Exact: E[1 - (1-b)^(1/k)] over k ~ Poisson(lambda), k >= 1. p*(0) is
  // undefined (an empty game never collides), so the k = 0 mass is dropped
  // and the remainder renormalized.
  int horizon = specfun::poisson_horizon(lambda);
  double acc = 0.0;
  for (int k = 1; k <= horizon; ++k) {
    double pk = -std::expm1(log_keep / k);
    acc += pk * specfun::poisson_pmf(k, lambda);
  }
  double p0 = specfun::poisson_pmf(0, lambda);
  double series = acc / (1.0 - p0);

  // First two Taylor terms of p*(k) around k = lambda; the linear term
  // averages out, leaving p*(lambda) itself.
  double taylor = -std::expm1(log_keep / lambda);

  double rel = series != 0.0 ? std::fabs(taylor - series) / series : 0.0;
  return {true, series, taylor, rel};
}

std::optional<FrontierSegment> restriction_frontier(
    const TwoTypeConfig& cfg, const CollisionBudget& budget) {
  cfg.validate();
  if (budget.budget >= 1.0) return std::nullopt;

  double p1_star, p2_star;
  if (cfg.is_poisson()) {
    const auto& pop = cfg.poisson();
    p1_star = p_star_poisson(pop.r1 * pop.lambda, budget).series;
    p2_star = p_star_poisson((1.0 - pop.r1) * pop.lambda, budget).series;
  } else {
    p1_star = p_star_fixedN(cfg.fixed().n1, budget).value();
    p2_star = p_star_fixedN(cfg.fixed().n2, budget).value();
  }

  FrontierSegment f;
  f.left = {0.0, p2_star};
  f.right = {p1_star, 0.0};
  f.knee = {0.5 * p1_star, 0.5 * p2_star};
  f.m1 = f.m2 = -p2_star / p1_star;
  return f;
}

RegionClassification admissible_region(const TwoTypeConfig& cfg,
                                       const CollisionBudget& budget,
                                       const FrontierSegment& pareto,
                                       int samples) {
  if (samples < 2) throw std::invalid_argument("admissible_region: samples");
  auto restriction = restriction_frontier(cfg, budget);

  RegionClassification out;
  if (!restriction.has_value()) {
    // No PU constraint: the Pareto frontier is the operating curve.
    out.regime = Regime::kParetoBinding;
    for (int i = 0; i < samples; ++i) {
      double p1 = pareto.right.p1 * i / (samples - 1);
      out.operating_curve.push_back({p1, pareto.p2_at(p1)});
    }
    return out;
  }

  double shared = std::min(pareto.right.p1, restriction->right.p1);
  bool pareto_below = false, restriction_below = false;
  for (int i = 0; i < samples; ++i) {
    double p1 = shared * i / (samples - 1);
    double pp = pareto.p2_at(p1);
    double rp = restriction->p2_at(p1);
    out.operating_curve.push_back({p1, std::min(pp, rp)});
    // Endpoint ties (both curves hit p2 = 0) carry no ordering information.
    if (std::fabs(pp - rp) < 1e-12) continue;
    (pp < rp ? pareto_below : restriction_below) = true;
  }
  // A frontier that extends past the shared range lies above the other
  // one there (the other is already at p2 = 0).
  if (pareto.right.p1 > restriction->right.p1 + 1e-12) {
    restriction_below = true;
  } else if (restriction->right.p1 > pareto.right.p1 + 1e-12) {
    pareto_below = true;
  }

  if (pareto_below && restriction_below) {
    out.regime = Regime::kMixed;
  } else if (restriction_below) {
    out.regime = Regime::kRestrictionBinding;
  } else {
    out.regime = Regime::kParetoBinding;
  }
  return out;
}

}  // namespace crgames
