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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crgames/errors.hpp"
#include "crgames/specfun.hpp"

namespace crgames {

using specfun::binom_pmf;
using specfun::poisson_pmf;

Prob p_eq_fixedN(double alpha, int n) {
  if (n < 2) throw std::domain_error("p_eq_fixedN: N < 2");
  if (alpha < 0.0) throw std::domain_error("p_eq_fixedN: alpha < 0");
  if (alpha == 0.0) return Prob(1.0);
  double theta = std::pow(alpha / (1.0 + alpha), 1.0 / (n - 1));
  return Prob::Clamped(1.0 - theta);
}

double alpha_star_K1(int n) {
  if (n < 2) throw std::domain_error("alpha_star_K1: N < 2");
  // (N/(N-1))^(N-1) via expm1 so the N -> infinity limit 1/(e-1) is hit
  // without cancellation.
  double g = std::expm1((n - 1) * std::log(n / (n - 1.0)));
  return 1.0 / g;
}

Prob pnc_given_tx(Prob p, int n, int k_max) {
  if (n < 1) throw std::domain_error("pnc_given_tx: N < 1");
  if (k_max < 0) throw std::domain_error("pnc_given_tx: k_max < 0");
  return specfun::binom_cdf(std::min(k_max, n - 1), n - 1, p);
}

Prob pnc_exact(Prob p, int n, int k_max) {
  return Prob::Clamped(p * pnc_given_tx(p, n, k_max));
}

Prob pnc_gaussian(Prob p, int n, int k_max) {
  if (n < 1) throw std::domain_error("pnc_gaussian: N < 1");
  if (k_max < 0) throw std::domain_error("pnc_gaussian: k_max < 0");
  if (p == 0.0) return Prob(1.0);  // zero interferers for sure
  if (p == 1.0) return Prob(n - 1 <= k_max ? 1.0 : 0.0);
  double mu = (n - 1) * p;
  double var = (n - 1) * p * (1.0 - p);
  double z = (k_max + 0.5 - mu) / std::sqrt(var);
  return Prob::Clamped(specfun::normal_cdf(z));
}

Prob p_opt_fixedN(int n, int k_max) {
  if (n < 2) throw std::domain_error("p_opt_fixedN: N < 2");
  if (k_max < 0) throw std::domain_error("p_opt_fixedN: k_max < 0");
  return Prob(std::min(1.0, (k_max + 1.0) / (k_max + n)));
}

namespace {

// Numerator / denominator sums of the optimal-penalty ratio at p. The
// denominator either starts at i = k_max + 1 (exact complement of the
// numerator, which yields U_ON = 0) or at i = k_max (inclusive variant,
// overlapping the boundary term).
double alpha_ratio_fixedN(double p, int n, int k_max, bool inclusive) {
  if (k_max >= n - 1) {
    throw InfeasibleError(
        "alpha_star_fixedN: k_max >= N-1 means collisions are impossible "
        "and no finite penalty balances the game");
  }
  Prob pp(p);
  double num = 0.0;
  for (int k = 0; k <= k_max; ++k) num += binom_pmf(k, n - 1, pp);
  double den = 0.0;
  for (int i = inclusive ? k_max : k_max + 1; i <= n - 1; ++i) {
    den += binom_pmf(i, n - 1, pp);
  }
  if (den < 1e-300) {
    throw InfeasibleError("alpha_star_fixedN: collision mass is zero");
  }
  return num / den;
}

}  // namespace

double alpha_star_fixedN(int n, int k_max) {
  return alpha_ratio_fixedN(p_opt_fixedN(n, k_max), n, k_max, false);
}

double alpha_star_fixedN_inclusive(int n, int k_max) {
  return alpha_ratio_fixedN(p_opt_fixedN(n, k_max), n, k_max, true);
}

Prob p_eq_fixedN_mpr(double alpha, int n, int k_max, const Tolerance& tol) {
  if (n < 2) throw std::domain_error("p_eq_fixedN_mpr: N < 2");
  if (alpha < 0.0) throw std::domain_error("p_eq_fixedN_mpr: alpha < 0");
  if (alpha == 0.0) return Prob(1.0);
  if (k_max >= n - 1) return Prob(1.0);  // collisions impossible
  double target = alpha / (1.0 + alpha);
  // pnc_given_tx decreases from 1 (p=0) to 0 (p=1), so the root is unique.
  auto f = [&](double p) {
    return pnc_given_tx(Prob::Clamped(p), n, k_max) - target;
  };
  return Prob::Clamped(specfun::find_root(f, 0.0, 1.0, tol));
}

double population_generating(Prob theta, const PopulationPmf& pop) {
  switch (pop.kind()) {
    case PopulationPmf::Kind::kPoisson: {
      double lambda = pop.lambda();
      if (theta < 1e-12) return lambda * std::exp(-lambda);
      return std::exp(-lambda) * std::expm1(theta * lambda) / theta;
    }
    case PopulationPmf::Kind::kDegenerate:
      return pop.n0() == 1 ? 1.0 : std::pow(theta, pop.n0() - 1);
    case PopulationPmf::Kind::kTable: {
      double sum = 0.0;
      for (int n = 1; n <= pop.horizon(); ++n) {
        sum += (n == 1 ? 1.0 : std::pow(theta, n - 1)) * pop.pmf(n);
      }
      return sum;
    }
  }
  return 0.0;
}

Prob p_eq_random(double alpha, const PopulationPmf& pop, const Tolerance& tol,
                 bool condition_nonempty) {
  if (alpha < 0.0) throw std::domain_error("p_eq_random: alpha < 0");
  if (alpha == 0.0) return Prob(1.0);
  double target = alpha / (1.0 + alpha);
  if (condition_nonempty) target *= 1.0 - pop.zero_mass();
  double f0 = population_generating(Prob(0.0), pop);
  double f1 = population_generating(Prob(1.0), pop);
  if (target < f0 || target > f1) {
    throw InfeasibleError(
        "p_eq_random: no interior equilibrium (target outside the range of "
        "F_N)");
  }
  auto f = [&](double theta) {
    return population_generating(Prob::Clamped(theta), pop) - target;
  };
  double theta = specfun::find_root(f, 0.0, 1.0, tol);
  return Prob::Clamped(1.0 - theta);
}

Prob p_eq_random_mpr(double alpha, const PopulationPmf& pop, int k_max,
                     const Tolerance& tol, bool condition_nonempty) {
  if (alpha < 0.0) throw std::domain_error("p_eq_random_mpr: alpha < 0");
  if (alpha == 0.0) return Prob(1.0);
  int horizon = pop.horizon();
  double nonzero = condition_nonempty ? 1.0 - pop.zero_mass() : 1.0;
  // (1+alpha) sum_N P_N(N) Pnc|tx(p, N) - alpha * nonzero, decreasing in p.
  auto g = [&](double p) {
    Prob pp = Prob::Clamped(p);
    double acc = 0.0;
    for (int n = 1; n <= horizon; ++n) {
      double mass = pop.pmf(n);
      if (mass == 0.0) continue;
      acc += mass * pnc_given_tx(pp, n, k_max);
    }
    return (1.0 + alpha) * acc - alpha * nonzero;
  };
  if (g(1.0) > 0.0) return Prob(1.0);  // ON dominates even at p = 1
  if (g(0.0) < 0.0) {
    throw InfeasibleError("p_eq_random_mpr: no equilibrium in [0,1]");
  }
  return Prob::Clamped(specfun::find_root(g, 0.0, 1.0, tol));
}

Prob p_opt_poisson_full(double lambda, int k_max) {
  if (!(lambda > 0.0)) throw std::domain_error("p_opt_poisson_full: lambda");
  if (k_max < 0) throw std::domain_error("p_opt_poisson_full: k_max < 0");
  int horizon = specfun::poisson_horizon(lambda);
  double acc = 0.0;
  for (int n = 0; n <= horizon; ++n) {
    double weight = n <= k_max ? 1.0 : (k_max + 1.0) / (k_max + n);
    acc += weight * poisson_pmf(n, lambda);
  }
  return Prob::Clamped(acc);
}

Prob p_opt_poisson(double lambda, int k_max) {
  if (k_max < 0) throw std::domain_error("p_opt_poisson: k_max < 0");
  if (!(lambda + k_max > 1.0)) {
    throw std::domain_error("p_opt_poisson: requires lambda + k_max > 1");
  }
  double p = (k_max + 1.0) / (lambda + k_max - 1.0);
  return Prob(std::min(1.0, p));
}

namespace {

double alpha_ratio_poisson(double lambda, int k_max, bool inclusive) {
  if (!(lambda > 0.0)) {
    throw std::domain_error("alpha_star_poisson: lambda <= 0");
  }
  if (!(lambda > k_max)) {
    throw InfeasibleError(
        "alpha_star_poisson: k_max >= lambda, collisions are essentially "
        "impossible and no finite penalty balances the game");
  }
  Prob p = p_opt_poisson(lambda, k_max);
  int horizon = specfun::poisson_horizon(lambda);
  double num = 0.0, den = 0.0;
  for (int n = k_max + 1; n <= horizon; ++n) {
    double mass = poisson_pmf(n, lambda);
    double nc = 0.0;
    for (int k = 0; k <= k_max; ++k) nc += binom_pmf(k, n - 1, p);
    num += mass * nc;
    // Exact complement sums i = k_max+1 .. n-1; the inclusive variant
    // keeps the i = k_max boundary term in the denominator as well.
    double col = 1.0 - nc;
    if (inclusive) col += binom_pmf(k_max, n - 1, p);
    den += mass * col;
  }
  if (den < 1e-300) {
    throw InfeasibleError(
        "alpha_star_poisson: collision mass is zero; no finite penalty");
  }
  return num / den;
}

}  // namespace

double alpha_star_poisson(double lambda, int k_max) {
  return alpha_ratio_poisson(lambda, k_max, false);
}

double alpha_star_poisson_inclusive(double lambda, int k_max) {
  return alpha_ratio_poisson(lambda, k_max, true);
}

EquilibriumResult solve_single_type(const PopulationPmf& pop,
                                    const SolveOptions& options) {
  EquilibriumResult res;
  int k = options.k_max;
  if (options.alpha >= 0.0) {
    res.alpha = options.alpha;
  } else if (pop.kind() == PopulationPmf::Kind::kDegenerate) {
    res.alpha = alpha_star_fixedN(pop.n0(), k);
  } else if (pop.kind() == PopulationPmf::Kind::kPoisson) {
    res.alpha = alpha_star_poisson(pop.lambda(), k);
  } else {
    throw std::invalid_argument(
        "solve_single_type: optimal penalty needs a named population; pass "
        "alpha explicitly for table populations");
  }

  if (pop.kind() == PopulationPmf::Kind::kDegenerate) {
    res.p_eq = p_eq_fixedN_mpr(res.alpha, pop.n0(), k, options.tol);
    double nc = pnc_given_tx(res.p_eq, pop.n0(), k);
    res.residual = std::fabs(nc - res.alpha * (1.0 - nc));
  } else {
    res.p_eq = p_eq_random_mpr(res.alpha, pop, k, options.tol);
    double acc = 0.0;
    for (int n = 1; n <= pop.horizon(); ++n) {
      double mass = pop.pmf(n);
      if (mass > 0.0) acc += mass * pnc_given_tx(res.p_eq, n, k);
    }
    res.residual = std::fabs((1.0 + res.alpha) * acc -
                             res.alpha * (1.0 - pop.zero_mass()));
  }
  return res;
}

}  // namespace crgames
