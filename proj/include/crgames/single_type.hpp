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

#ifndef CRGAMES_SINGLE_TYPE_HPP_
#define CRGAMES_SINGLE_TYPE_HPP_

#include "crgames/population.hpp"
#include "crgames/prob.hpp"

// Closed-form equilibrium strategies, optimal transmit probabilities and
// optimal collision penalties for a single class of users, with either a
// known population of N players or a random (e.g. Poisson) population.
//
// Success convention throughout: a transmission survives when at most
// k_max OTHER players transmit in the same slot (the receiver decodes up
// to k_max + 1 simultaneous packets).

namespace crgames {

struct EquilibriumResult {
  Prob p_eq;
  double alpha = 0.0;
  double residual = 0.0;  // |U_ON| at the reported equilibrium, in units of R
};

// One-stop solver: equilibrium of the penalized game over any population.
// With no penalty given, the optimal penalty (alpha_star_*) is derived
// first, which places the equilibrium at the optimal transmit probability.
struct SolveOptions {
  int k_max = 0;
  double alpha = -1.0;  // < 0 means "derive the optimal penalty"
  Tolerance tol = Tolerance();
};

// --- known population -------------------------------------------------

// Mixed equilibrium of the penalized game in the single-success case
// (k_max = 0):  p_eq = 1 - (alpha/(1+alpha))^(1/(N-1)).
Prob p_eq_fixedN(double alpha, int n);

// Penalty that puts the equilibrium at p = 1/N in the single-success
// case: alpha = 1 / ((N/(N-1))^(N-1) - 1). Decreases from 1 (N = 2)
// towards 1/(e-1).
double alpha_star_K1(int n);

// P(a given player transmits without collision):
// p * P(Binom(N-1, p) <= k_max).
Prob pnc_exact(Prob p, int n, int k_max);

// P(at most k_max of the N-1 others transmit), i.e. pnc_exact without the
// leading p factor. Indifference conditions live in this conditional form.
Prob pnc_given_tx(Prob p, int n, int k_max);

// Gaussian tail approximation of pnc_given_tx with continuity correction.
Prob pnc_gaussian(Prob p, int n, int k_max);

// (k_max + 1) / (k_max + N), the near-optimal transmit probability.
Prob p_opt_fixedN(int n, int k_max);

// Penalty that makes p_opt_fixedN the indifference point:
// alpha = Pnc / (1 - Pnc) with Pnc = pnc_given_tx at p_opt. This is the
// value that satisfies U_ON = 0 exactly. The _inclusive variant counts the
// boundary outcome (exactly k_max interferers) in the collision mass as
// well, so its denominator overlaps the numerator and the ratio comes out
// smaller; it is reported alongside for comparison. Both throw
// InfeasibleError when collisions are impossible (k_max >= N-1).
double alpha_star_fixedN(int n, int k_max);
double alpha_star_fixedN_inclusive(int n, int k_max);

// Indifference point of the penalized game for arbitrary k_max: the p with
// pnc_given_tx(p, N, k_max) = alpha/(1+alpha). Reduces to p_eq_fixedN when
// k_max = 0. alpha = 0 gives p = 1.
Prob p_eq_fixedN_mpr(double alpha, int n, int k_max,
                     const Tolerance& tol = Tolerance());

// --- random population -------------------------------------------------

// F_N(theta) = sum_{N>=1} theta^(N-1) P_N(N). For a Poisson population the
// closed form e^{-lambda} (e^{theta lambda} - 1) / theta is used, with the
// theta -> 0 limit lambda e^{-lambda}.
double population_generating(Prob theta, const PopulationPmf& pop);

// Equilibrium of the single-success penalized game under population
// uncertainty: inverts F_N(theta) = alpha/(1+alpha) * (1 - P_N(0)) and
// returns p = 1 - theta. condition_nonempty keeps the (1 - P_N(0)) factor
// (the game is conditioned on at least one player existing); disabling it
// solves F_N(theta) = alpha/(1+alpha) instead. alpha = 0 returns p = 1.
// Throws InfeasibleError when the target is below the range of F_N.
Prob p_eq_random(double alpha, const PopulationPmf& pop,
                 const Tolerance& tol = Tolerance(),
                 bool condition_nonempty = true);

// General-k_max indifference point under population uncertainty: solves
// sum_N P_N(N) [ (1+alpha) pnc_given_tx(p, N, k_max) ] = alpha (1 - P_N(0)).
// Reduces to p_eq_random for k_max = 0.
Prob p_eq_random_mpr(double alpha, const PopulationPmf& pop, int k_max,
                     const Tolerance& tol = Tolerance(),
                     bool condition_nonempty = true);

// Optimal transmit probability for a Poisson population: the defining
// mixture sum (probability 1 while N <= k_max, the fixed-N optimum
// beyond), truncated at the Poisson horizon.
Prob p_opt_poisson_full(double lambda, int k_max);

// Closed-form approximation (k_max + 1) / (lambda + k_max - 1), clamped
// to (0, 1].
Prob p_opt_poisson(double lambda, int k_max);

// Penalty for the Poisson-population game, evaluated at p_opt_poisson:
// ratio of the population-averaged non-collision mass to the averaged
// collision mass over N > k_max. As in the fixed-N case the primary value
// uses the exact complement (indifference over the contested populations);
// the _inclusive variant counts the k_max boundary outcome on both sides.
// Throws InfeasibleError when collisions are essentially impossible.
double alpha_star_poisson(double lambda, int k_max);
double alpha_star_poisson_inclusive(double lambda, int k_max);

EquilibriumResult solve_single_type(const PopulationPmf& pop,
                                    const SolveOptions& options);

}  // namespace crgames

#endif  // CRGAMES_SINGLE_TYPE_HPP_
