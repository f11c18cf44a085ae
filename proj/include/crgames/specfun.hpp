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

#ifndef CRGAMES_SPECFUN_HPP_
#define CRGAMES_SPECFUN_HPP_

#include <functional>

#include "crgames/prob.hpp"

// Deterministic special functions, root finding and 1-D optimization.
// Everything here is pure and reentrant. Probability mass functions are
// evaluated in log space so that populations in the hundreds and means
// beyond 100 stay well inside double range.

namespace crgames::specfun {

// ln Gamma(x) for x > 0 (Lanczos approximation, ~1e-14 relative).
double lgamma_pos(double x);

// ln C(n, k); requires 0 <= k <= n.
double log_choose(int n, int k);

// Poisson pmf  e^{-lambda} lambda^k / k!,  lambda >= 0.
Prob poisson_pmf(int k, double lambda);

// Poisson lower CDF  P(X <= k); k < 0 gives 0.
Prob poisson_cdf(int k, double lambda);

// Truncation horizon for infinite sums over a Poisson population:
// ceil(lambda + 20 sqrt(lambda) + 20). Tail mass beyond it is < 1e-12
// for any lambda this library deals with.
int poisson_horizon(double lambda);

// Binomial pmf  C(n,k) p^k (1-p)^{n-k}; throws std::domain_error if k > n.
Prob binom_pmf(int k, int n, Prob p);

// Binomial lower CDF  P(X <= k) for X ~ Binom(n, p); k < 0 gives 0.
Prob binom_cdf(int k, int n, Prob p);

// Regularized incomplete beta I_x(a, b), a, b > 0, via the standard
// continued fraction. Converges to ~1e-14; throws NumericError otherwise.
Prob reg_inc_beta(Prob x, double a, double b);

// Standard normal CDF.
double normal_cdf(double x);

// Root of a continuous scalar function on [lo, hi] with f(lo) f(hi) <= 0.
// Bisection with secant acceleration; stops when |f| <= abs_tol or the
// bracket width falls below abs_tol. Throws BracketingError if the
// endpoints do not straddle a root, NumericError past max_iter.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol = Tolerance());

// Maximizer of f on [lo, hi]: coarse scan over n_coarse intervals, then
// golden-section refinement of the best bracket for refine_rounds steps.
// Total function; requires n_coarse >= 3.
double argmax_grid(const std::function<double(double)>& f, double lo,
                   double hi, int n_coarse = 1024, int refine_rounds = 60);

}  // namespace crgames::specfun

#endif  // CRGAMES_SPECFUN_HPP_
