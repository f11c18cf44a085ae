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

#include <cmath>
#include <vector>

#include "crgames/errors.hpp"
#include "crgames/single_type.hpp"
#include "crgames/specfun.hpp"
#include "doctest.h"

using namespace crgames;

TEST_CASE("ge_derive") {
  GEModel ge = ge_derive(Prob(0.5), Prob(0.0));
  CHECK(ge.q == doctest::Approx(0.5));
  CHECK(ge.r == doctest::Approx(0.5));
  CHECK(ge.n_on_bar == doctest::Approx(2.0));

  GEModel sticky = ge_derive(Prob(0.5), Prob(0.5));
  CHECK(sticky.r == doctest::Approx(0.25));
  CHECK(sticky.n_on_bar == doctest::Approx(4.0));

  CHECK_THROWS_AS(ge_derive(Prob(0.5), Prob(1.0)), std::domain_error);
}

TEST_CASE("GE chain reaches its stationary law and dwell time") {
  GEModel ge = ge_derive(Prob(0.5), Prob(0.5));
  const int chains = 64;
  const long steps = 20000;
  std::vector<double> on_fraction, run_length;
  for (int c = 0; c < chains; ++c) {
    Rng rng(Rng::Split(20260208, c));
    bool on = rng.Bernoulli(ge.p_t);
    long on_slots = 0, transitions = 0;
    for (long i = 0; i < steps; ++i) {
      bool was = on;
      on = ge_step(ge, on, rng);
      if (on) {
        ++on_slots;
        if (!was) ++transitions;
      }
    }
    on_fraction.push_back(static_cast<double>(on_slots) / steps);
    if (transitions > 0) {
      run_length.push_back(static_cast<double>(on_slots) / transitions);
    }
  }
  auto mean_se = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    m /= v.size();
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::pair{m, std::sqrt(ss / (v.size() - 1) / v.size())};
  };
  auto [on_mean, on_se] = mean_se(on_fraction);
  CHECK(std::fabs(on_mean - ge.p_t) <= 3.0 * on_se);
  auto [run_mean, run_se] = mean_se(run_length);
  CHECK(std::fabs(run_mean - ge.n_on_bar) <= 3.0 * run_se + 0.01);
}

TEST_CASE("pu_collision_prob") {
  GEModel ge = ge_derive(Prob(0.5), Prob(0.5));  // n_on_bar = 4
  CHECK(pu_collision_prob(Prob(0.0), ge) == 0.0);
  CHECK(pu_collision_prob(Prob(1.0), ge) == doctest::Approx(0.25));
}

TEST_CASE("p_su_t_fixedN") {
  CHECK(p_su_t_fixedN(Prob(0.0), 10) == 0.0);
  CHECK(p_su_t_fixedN(Prob(1.0), 10) == 1.0);
  CHECK(p_su_t_fixedN(Prob(0.1), 10) ==
        doctest::Approx(1.0 - std::pow(0.9, 10)).epsilon(1e-12));
}

TEST_CASE("p_star_fixedN meets the budget with equality") {
  CHECK_FALSE(p_star_fixedN(10, CollisionBudget::FromBudget(1.0)).has_value());
  CHECK(p_star_fixedN(1, CollisionBudget::FromBudget(0.3)).value() ==
        doctest::Approx(0.3).epsilon(1e-12));
  auto p = p_star_fixedN(25, CollisionBudget::FromBudget(0.9));
  REQUIRE(p.has_value());
  CHECK(std::fabs(p_su_t_fixedN(*p, 25) - 0.9) < 1e-12);

  // Strictly decreasing in N.
  double prev = 1.0;
  for (int n : {2, 5, 10, 25, 80}) {
    double v = p_star_fixedN(n, CollisionBudget::FromBudget(0.5)).value();
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("p_opt_constrained_fixedN picks the binding branch") {
  auto loose = p_opt_constrained_fixedN(25, 3, CollisionBudget::FromBudget(0.999));
  CHECK_FALSE(loose.collision_limited);
  CHECK(loose.p == doctest::Approx(p_opt_fixedN(25, 3).value()));

  auto tight = p_opt_constrained_fixedN(25, 3, CollisionBudget::FromBudget(0.05));
  CHECK(tight.collision_limited);
  CHECK(tight.p ==
        doctest::Approx(p_star_fixedN(25, CollisionBudget::FromBudget(0.05))
                            ->value()));

  // Continuity where both branches agree.
  double p_opt = p_opt_fixedN(25, 3);
  double budget = p_su_t_fixedN(Prob(p_opt), 25);
  auto at_knee =
      p_opt_constrained_fixedN(25, 3, CollisionBudget::FromBudget(budget));
  CHECK(at_knee.p == doctest::Approx(p_opt).epsilon(1e-12));
}

TEST_CASE("p_star_poisson series against direct averaging") {
  CollisionBudget b = CollisionBudget::FromBudget(0.9);
  auto res = p_star_poisson(25.0, b);
  REQUIRE(res.constrained);

  // Independent summation with the same horizon policy.
  double acc = 0.0, mass = 0.0;
  double pmf = std::exp(-25.0);
  for (int k = 1; k <= 121; ++k) {  // 25 + 20 sqrt(25) + 20 = 145 > 121 terms
    pmf = specfun::poisson_pmf(k, 25.0);
    acc += (1.0 - std::pow(0.1, 1.0 / k)) * pmf;
    mass += pmf;
  }
  double expect = acc / (1.0 - std::exp(-25.0));
  CHECK(res.series == doctest::Approx(expect).epsilon(1e-9));

  // Large-lambda closed form within 5% at the documented configuration.
  CHECK(res.rel_deviation < 0.05);
  CHECK(res.taylor ==
        doctest::Approx(1.0 - std::pow(0.1, 1.0 / 25.0)).epsilon(1e-12));

  // budget -> 0 sends both evaluations to 0.
  auto tiny = p_star_poisson(25.0, CollisionBudget::FromBudget(1e-9));
  CHECK(tiny.series < 1e-9);
  CHECK(tiny.taylor < 1e-9);

  CHECK_FALSE(p_star_poisson(25.0, CollisionBudget::FromBudget(1.2)).constrained);
}

TEST_CASE("restriction_frontier endpoints satisfy the constraint exactly") {
  TwoTypeConfig cfg{FixedTwoType{25, 20}, 1.0, 1.0, 3, 3};
  CollisionBudget b = CollisionBudget::FromBudget(0.9);
  auto f = restriction_frontier(cfg, b);
  REQUIRE(f.has_value());
  CHECK(f->right.p1 ==
        doctest::Approx(p_star_fixedN(25, b)->value()).epsilon(1e-12));
  CHECK(f->left.p2 ==
        doctest::Approx(p_star_fixedN(20, b)->value()).epsilon(1e-12));

  // Equality at the endpoints.
  CHECK(std::fabs(p_su_t_fixedN(Prob(f->right.p1), 25) - 0.9) < 1e-12);
  CHECK(std::fabs(p_su_t_fixedN(Prob(f->left.p2), 20) - 0.9) < 1e-12);

  // The straight line stays within slack of the budget in the middle.
  double p1 = 0.5 * f->right.p1;
  double p2 = f->p2_at(p1);
  double constraint =
      1.0 - std::pow(1.0 - p1, 25) * std::pow(1.0 - p2, 20);
  CHECK(constraint <= 0.9 + 0.05);

  CHECK_FALSE(restriction_frontier(cfg, CollisionBudget::FromBudget(1.0))
                  .has_value());
}

TEST_CASE("admissible_region distinguishes the three regimes") {
  CollisionBudget b = CollisionBudget::FromBudget(0.9);

  // Tiny budget: the restriction hugs the origin and binds everywhere.
  TwoTypeConfig cfg{PoissonTwoType{25.0, 0.3}, 1.0, 1.0, 4, 4};
  auto pareto = pareto_frontier_poisson(cfg);
  auto tight = admissible_region(cfg, CollisionBudget::FromBudget(0.01), pareto);
  CHECK(tight.regime == Regime::kRestrictionBinding);

  // Unconstrained budget: Pareto frontier rules.
  auto open = admissible_region(cfg, CollisionBudget::FromBudget(0.999999),
                                pareto);
  CHECK(open.regime == Regime::kParetoBinding);

  // Mildly asymmetric tolerances cross the two frontiers.
  TwoTypeConfig crossing{PoissonTwoType{25.0, 0.3}, 1.0, 1.0, 3, 1};
  auto mixed =
      admissible_region(crossing, b, pareto_frontier_poisson(crossing));
  CHECK(mixed.regime == Regime::kMixed);

  // The operating curve never exceeds either frontier.
  auto restriction = restriction_frontier(crossing, b);
  for (const Point2& pt : mixed.operating_curve) {
    CHECK(pt.p2 <= pareto_frontier_poisson(crossing).p2_at(pt.p1) + 1e-12);
    CHECK(pt.p2 <= restriction->p2_at(pt.p1) + 1e-12);
  }
}

TEST_CASE("operating curve respects the collision budget with slack") {
  CollisionBudget b = CollisionBudget::FromBudget(0.9);

  // Known population: evaluate the exact constraint along the curve.
  TwoTypeConfig fixed{FixedTwoType{25, 20}, 1.0, 1.0, 3, 3};
  auto fixed_region =
      admissible_region(fixed, b, pareto_frontier_fixed(fixed));
  for (const Point2& pt : fixed_region.operating_curve) {
    double p_su_t =
        1.0 - std::pow(1.0 - pt.p1, 25) * std::pow(1.0 - pt.p2, 20);
    CHECK(p_su_t <= 0.9 + 0.05);
  }

  // Poisson population: the constraint reduces to 1 - e^{-lambda tau}.
  TwoTypeConfig poisson{PoissonTwoType{25.0, 0.3}, 1.0, 1.0, 3, 1};
  auto region =
      admissible_region(poisson, b, pareto_frontier_poisson(poisson));
  for (const Point2& pt : region.operating_curve) {
    double mean_tx = 25.0 * (0.3 * pt.p1 + 0.7 * pt.p2);
    CHECK(1.0 - std::exp(-mean_tx) <= 0.9 + 0.05);
  }
}
