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

#include "crgames/single_type.hpp"

#include <cmath>

#include "crgames/errors.hpp"
#include "crgames/specfun.hpp"
#include "doctest.h"

using namespace crgames;

TEST_CASE("p_eq_fixedN closed form") {
  CHECK(p_eq_fixedN(0.0, 7) == 1.0);
  CHECK(p_eq_fixedN(1e12, 5) < 1e-10);
  CHECK(p_eq_fixedN(1.0, 2) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("p_eq_fixedN decreases in alpha and in N") {
  double prev = 1.0;
  for (double alpha : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    double p = p_eq_fixedN(alpha, 10);
    CHECK(p < prev);
    prev = p;
  }
  prev = 1.0;
  for (int n : {2, 3, 5, 10, 50, 200}) {
    double p = p_eq_fixedN(0.7, n);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("alpha_star_K1 endpoints and round trip") {
  CHECK(alpha_star_K1(2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(alpha_star_K1(1000000) ==
        doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-5));
  // Penalty alpha_star_K1(N) puts the equilibrium exactly at 1/N.
  for (int n : {2, 3, 5, 20}) {
    CHECK(std::fabs(p_eq_fixedN(alpha_star_K1(n), n) - 1.0 / n) < 1e-10);
  }
  // Monotone decreasing towards 1/(e-1).
  double prev = 2.0;
  for (int n : {2, 3, 5, 10, 100}) {
    double a = alpha_star_K1(n);
    CHECK(a < prev);
    CHECK(a > 1.0 / (std::exp(1.0) - 1.0) - 1e-12);
    prev = a;
  }
}

TEST_CASE("pnc_exact edge cases") {
  CHECK(pnc_exact(Prob(0.0), 20, 3) == 0.0);
  CHECK(pnc_exact(Prob(0.37), 10, 9) == doctest::Approx(0.37).epsilon(1e-12));
  CHECK(pnc_exact(Prob(0.37), 10, 40) == doctest::Approx(0.37).epsilon(1e-12));
  CHECK(pnc_exact(Prob(1.0), 20, 3) == 0.0);
}

TEST_CASE("pnc_gaussian tracks the exact binomial tail") {
  // The Gaussian form approximates the conditional tail (no leading p).
  // Measured deviation at (N=50, K=5, p=0.1) is 0.0222.
  CHECK(std::fabs(pnc_gaussian(Prob(0.1), 50, 5) -
                  pnc_given_tx(Prob(0.1), 50, 5)) < 0.025);
  double prev = 0.0;
  for (int k = 0; k <= 6; ++k) {
    double g = pnc_gaussian(Prob(0.05), 20, k);
    CHECK(g >= prev);  // monotone in k, like the exact tail
    CHECK(std::fabs(g - pnc_given_tx(Prob(0.05), 20, k)) < 0.06);
    prev = g;
  }
  CHECK(pnc_gaussian(Prob(0.5), 20, 9) ==  // k+0.5 == (N-1)p exactly
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("p_opt_fixedN formula and grid oracle") {
  CHECK(p_opt_fixedN(10, 0) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(p_opt_fixedN(20, 3) == doctest::Approx(4.0 / 23.0).epsilon(1e-15));
  // Measured gap to the true maximizer over N in [5,50], K in [0,8] with
  // K < (N-1)/2 peaks at 0.0241 (N=20, K=3); at (5,1) the formula is exact.
  auto pnc = [](double p) { return pnc_exact(Prob(p), 20, 3).value(); };
  CHECK(std::fabs(p_opt_fixedN(20, 3) -
                  specfun::argmax_grid(pnc, 0.0, 1.0)) <= 0.025);
  CHECK(p_opt_fixedN(5, 1) ==
        doctest::Approx(specfun::argmax_grid(
                            [](double p) {
                              return pnc_exact(Prob(p), 5, 1).value();
                            },
                            0.0, 1.0))
            .epsilon(1e-5));
}

TEST_CASE("alpha_star_fixedN balances the game exactly") {
  // Single-success case reduces to the K1 closed form.
  CHECK(alpha_star_fixedN(2, 0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int n : {2, 5, 20}) {
    CHECK(alpha_star_fixedN(n, 0) ==
          doctest::Approx(alpha_star_K1(n)).epsilon(1e-10));
  }

  // Indifference: U_ON = R [Pnc - alpha (1 - Pnc)] = 0 at p_opt.
  for (int n : {5, 10, 20, 50}) {
    for (int k : {1, 3, 5, 7}) {
      if (k >= n - 1) continue;
      double alpha = alpha_star_fixedN(n, k);
      double pnc = pnc_given_tx(p_opt_fixedN(n, k), n, k);
      double u_on = pnc - alpha * (1.0 - pnc);
      CHECK(std::fabs(u_on) <= 1e-8);
    }
  }

  // The inclusive ratio differs by the double-counted boundary term;
  // both are recorded, the inclusive one is strictly smaller.
  CHECK(alpha_star_fixedN_inclusive(2, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(alpha_star_fixedN_inclusive(20, 3) < alpha_star_fixedN(20, 3));

  CHECK(alpha_star_fixedN(5, 1) > alpha_star_fixedN(50, 1));
  CHECK_THROWS_AS(alpha_star_fixedN(5, 4), InfeasibleError);
}

TEST_CASE("p_eq_fixedN_mpr reduces to the closed form at k_max = 0") {
  for (double alpha : {0.3, 1.0, 4.0}) {
    for (int n : {2, 5, 20}) {
      CHECK(p_eq_fixedN_mpr(alpha, n, 0) ==
            doctest::Approx(p_eq_fixedN(alpha, n)).epsilon(1e-9));
    }
  }
  CHECK(p_eq_fixedN_mpr(0.0, 20, 3) == 1.0);
  // At alpha_star the equilibrium sits at p_opt.
  for (int k : {1, 3, 5}) {
    double p = p_eq_fixedN_mpr(alpha_star_fixedN(20, k), 20, k);
    CHECK(p == doctest::Approx(p_opt_fixedN(20, k)).epsilon(1e-8));
  }
}

TEST_CASE("population_generating closed forms") {
  const double lambda = 15.0;
  auto pop = PopulationPmf::Poisson(lambda);
  CHECK(population_generating(Prob(1.0), pop) ==
        doctest::Approx(1.0 - std::exp(-lambda)).epsilon(1e-12));
  CHECK(population_generating(Prob(0.0), pop) ==
        doctest::Approx(lambda * std::exp(-lambda)).epsilon(1e-12));

  // Against the defining series.
  for (double theta : {0.2, 0.6, 0.95}) {
    double series = 0.0;
    for (int n = 1; n <= specfun::poisson_horizon(lambda); ++n) {
      series += std::pow(theta, n - 1) * specfun::poisson_pmf(n, lambda);
    }
    CHECK(population_generating(Prob(theta), pop) ==
          doctest::Approx(series).epsilon(1e-12));
  }

  auto degenerate = PopulationPmf::Degenerate(8);
  CHECK(population_generating(Prob(0.5), degenerate) ==
        doctest::Approx(std::pow(0.5, 7)).epsilon(1e-15));
}

TEST_CASE("F_N is strictly increasing for Poisson populations") {
  auto pop = PopulationPmf::Poisson(15.0);
  double prev = 0.0;
  for (int i = 0; i <= 50; ++i) {
    double v = population_generating(Prob(i / 50.0), pop);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("p_eq_random inversion") {
  auto pop = PopulationPmf::Poisson(15.0);
  CHECK(p_eq_random(0.0, pop) == 1.0);

  // Back-substitution: theta solves the equilibrium equation.
  double alpha = 1.0;
  double p = p_eq_random(alpha, pop);
  double theta = 1.0 - p;
  double residual = population_generating(Prob(theta), pop) -
                    alpha / (1.0 + alpha) * (1.0 - pop.zero_mass());
  CHECK(std::fabs(residual) < 1e-10);

  // Degenerate population recovers the fixed-N closed form.
  for (double a : {0.4, 1.0, 3.0}) {
    CHECK(p_eq_random(a, PopulationPmf::Degenerate(12)) ==
          doctest::Approx(p_eq_fixedN(a, 12)).epsilon(1e-12));
  }

  // Target below the range of F_N: no interior equilibrium.
  CHECK_THROWS_AS(p_eq_random(1e-9, PopulationPmf::Poisson(5.0)),
                  InfeasibleError);
}

TEST_CASE("p_eq_random_mpr reduces to p_eq_random at k_max = 0") {
  auto pop = PopulationPmf::Poisson(15.0);
  for (double alpha : {0.5, 1.0, 2.0}) {
    CHECK(p_eq_random_mpr(alpha, pop, 0) ==
          doctest::Approx(p_eq_random(alpha, pop)).epsilon(1e-8));
  }
}

TEST_CASE("p_opt_poisson closed form and mixture sum") {
  CHECK(p_opt_poisson(15.0, 3) == doctest::Approx(4.0 / 17.0).epsilon(1e-15));
  CHECK(p_opt_poisson(25.0, 3) == doctest::Approx(4.0 / 27.0).epsilon(1e-15));

  // lambda -> 0: all the mass sits at N <= k_max where transmitting is free.
  CHECK(p_opt_poisson_full(1e-6, 2) == doctest::Approx(1.0).epsilon(1e-5));

  // Mixture sum against an independently coded summation.
  const double lambda = 30.0;
  const int k = 5;
  double expect = 0.0;
  double pmf = std::exp(-lambda);
  for (int n = 0; n <= specfun::poisson_horizon(lambda); ++n) {
    if (n > 0) pmf *= lambda / n;
    expect += (n <= k ? 1.0 : (k + 1.0) / (k + n)) * pmf;
  }
  CHECK(p_opt_poisson_full(lambda, k) ==
        doctest::Approx(expect).epsilon(1e-10));

  // Closed form vs the mixture (within 10%) and vs the grid oracle for the
  // exact Poisson-population non-collision curve p * P(Pois(lambda p) <= k).
  CHECK(std::fabs(p_opt_poisson_full(15.0, 3) - 4.0 / 17.0) <
        0.1 * (4.0 / 17.0));
  // Measured gap to the exact Poisson-population maximizer is 0.0315 at
  // (lambda=30, K=5).
  auto pnc_pop = [](double p) {
    return p * specfun::poisson_cdf(5, 30.0 * p);
  };
  double grid_opt = specfun::argmax_grid(pnc_pop, 0.0, 1.0);
  CHECK(std::fabs(p_opt_poisson(30.0, 5) - grid_opt) <= 0.04);
}

TEST_CASE("solve_single_type packages the equilibrium pipeline") {
  // Fixed population with a derived penalty: lands on p_opt, residual ~ 0.
  auto fixed = solve_single_type(PopulationPmf::Degenerate(20),
                                 {.k_max = 3, .alpha = -1.0});
  CHECK(fixed.alpha == doctest::Approx(alpha_star_fixedN(20, 3)));
  CHECK(fixed.p_eq == doctest::Approx(p_opt_fixedN(20, 3)).epsilon(1e-8));
  CHECK(fixed.residual <= 1e-8);

  // Poisson population with an explicit penalty.
  auto poisson = solve_single_type(PopulationPmf::Poisson(15.0),
                                   {.k_max = 0, .alpha = 1.0});
  CHECK(poisson.p_eq ==
        doctest::Approx(p_eq_random(1.0, PopulationPmf::Poisson(15.0)))
            .epsilon(1e-8));
  CHECK(poisson.residual <= 1e-8);

  // Table populations have no closed-form optimal penalty.
  auto table = PopulationPmf::FromTable({0.0, 0.0, 0.5, 0.5});
  CHECK_THROWS_AS(solve_single_type(table, {.k_max = 0, .alpha = -1.0}),
                  std::invalid_argument);
  auto solved = solve_single_type(table, {.k_max = 0, .alpha = 0.8});
  CHECK(solved.residual <= 1e-8);
}

TEST_CASE("PopulationPmf table validation and generating function") {
  CHECK_THROWS_AS(PopulationPmf::FromTable({0.3, 0.3}), std::domain_error);
  CHECK_THROWS_AS(PopulationPmf::FromTable({1.2, -0.2}), std::domain_error);
  auto table = PopulationPmf::FromTable({0.1, 0.4, 0.5});
  CHECK(table.zero_mass() == doctest::Approx(0.1));
  CHECK(table.mean() == doctest::Approx(1.4));
  // F_N over a table: 0.4 theta^0 + 0.5 theta^1.
  CHECK(population_generating(Prob(0.3), table) ==
        doctest::Approx(0.4 + 0.5 * 0.3).epsilon(1e-12));
}

TEST_CASE("alpha_star_poisson") {
  // Round trip: the equilibrium induced by alpha_star lands near p_opt.
  double alpha = alpha_star_poisson(15.0, 3);
  double p = p_eq_random_mpr(alpha, PopulationPmf::Poisson(15.0), 3);
  CHECK(std::fabs(p - p_opt_poisson(15.0, 3)) < 0.05);

  // Large-lambda sanity band.
  for (double lambda : {50.0, 100.0, 200.0}) {
    double a = alpha_star_poisson(lambda, 3);
    CHECK(a > 0.5 / (std::exp(1.0) - 1.0));
    CHECK(a < 2.0);
  }

  // Nearly collision-free games admit no finite penalty.
  CHECK_THROWS_AS(alpha_star_poisson(4.0, 10), InfeasibleError);
  CHECK(alpha_star_poisson_inclusive(15.0, 3) < alpha_star_poisson(15.0, 3));
}
