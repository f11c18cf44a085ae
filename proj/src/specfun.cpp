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

#include "crgames/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crgames/errors.hpp"

namespace crgames::specfun {

namespace {

// Lanczos coefficients (g = 7, n = 9).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kLn2Pi = 1.8378770664093454836;  // ln(2*pi)

}  // namespace

double lgamma_pos(double x) {
  if (!(x > 0.0)) throw std::domain_error("lgamma_pos: x <= 0");
  if (x < 0.5) {
    // Reflection keeps the Lanczos series in its accurate range.
    return std::log(M_PI / std::sin(M_PI * x)) - lgamma_pos(1.0 - x);
  }
  double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  double t = z + 7.5;
  return 0.5 * kLn2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double log_choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::domain_error("log_choose: need 0 <= k <= n");
  }
  if (k == 0 || k == n) return 0.0;
  return lgamma_pos(n + 1.0) - lgamma_pos(k + 1.0) - lgamma_pos(n - k + 1.0);
}

Prob poisson_pmf(int k, double lambda) {
  if (k < 0) throw std::domain_error("poisson_pmf: k < 0");
  if (lambda < 0.0) throw std::domain_error("poisson_pmf: lambda < 0");
  if (lambda == 0.0) return Prob(k == 0 ? 1.0 : 0.0);
  double lp = k * std::log(lambda) - lambda - lgamma_pos(k + 1.0);
  return Prob::Clamped(std::exp(lp));
}

Prob poisson_cdf(int k, double lambda) {
  if (k < 0) return Prob(0.0);
  if (lambda == 0.0) return Prob(1.0);
  // Forward recurrence f(j) = f(j-1) * lambda / j, summed directly.
  double term = std::exp(-lambda);
  double sum = term;
  for (int j = 1; j <= k; ++j) {
    term *= lambda / j;
    sum += term;
  }
  return Prob::Clamped(sum);
}

int poisson_horizon(double lambda) {
  if (lambda < 0.0) throw std::domain_error("poisson_horizon: lambda < 0");
  return static_cast<int>(std::ceil(lambda + 20.0 * std::sqrt(lambda) + 20.0));
}

Prob binom_pmf(int k, int n, Prob p) {
  if (k > n) throw std::domain_error("binom_pmf: k > n");
  if (k < 0 || n < 0) throw std::domain_error("binom_pmf: negative argument");
  if (p == 0.0) return Prob(k == 0 ? 1.0 : 0.0);
  if (p == 1.0) return Prob(k == n ? 1.0 : 0.0);
  double lp = log_choose(n, k) + k * std::log(p.value()) +
              (n - k) * std::log1p(-p.value());
  return Prob::Clamped(std::exp(lp));
}

Prob binom_cdf(int k, int n, Prob p) {
  if (k < 0) return Prob(0.0);
  if (k >= n) return Prob(1.0);
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) sum += binom_pmf(j, n, p);
  return Prob::Clamped(sum);
}

namespace {

// Continued fraction for I_x(a,b), modified Lentz.
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw NumericError("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

Prob reg_inc_beta(Prob x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("reg_inc_beta: a, b must be > 0");
  }
  if (x == 0.0) return Prob(0.0);
  if (x == 1.0) return Prob(1.0);
  double lbt = lgamma_pos(a + b) - lgamma_pos(a) - lgamma_pos(b) +
               a * std::log(x.value()) + b * std::log1p(-x.value());
  double bt = std::exp(lbt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return Prob::Clamped(bt * beta_cf(a, b, x) / a);
  }
  return Prob::Clamped(1.0 - bt * beta_cf(b, a, 1.0 - x) / b);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / M_SQRT2); }

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    throw BracketingError("find_root: f(lo) and f(hi) have the same sign");
  }
  double a = lo, b = hi, fa = flo, fb = fhi;
  for (int it = 0; it < tol.max_iter; ++it) {
    // Secant candidate, safeguarded against leaving the bracket.
    double x = b - fb * (b - a) / (fb - fa);
    double mid = 0.5 * (a + b);
    if (!(x > a && x < b)) x = mid;
    // Alternate with bisection so the bracket cannot stall.
    if (it % 2 == 1) x = mid;
    double fx = f(x);
    if (std::fabs(fx) <= tol.abs_tol || (b - a) <= tol.abs_tol) return x;
    if (fa * fx <= 0.0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
  }
  throw NumericError("find_root: max_iter exceeded");
}

double argmax_grid(const std::function<double(double)>& f, double lo,
                   double hi, int n_coarse, int refine_rounds) {
  if (n_coarse < 3) throw std::domain_error("argmax_grid: n_coarse < 3");
  if (hi < lo) std::swap(lo, hi);
  double h = (hi - lo) / n_coarse;
  int best = 0;
  double fbest = f(lo);
  for (int i = 1; i <= n_coarse; ++i) {
    double v = f(lo + i * h);
    if (v > fbest) {
      fbest = v;
      best = i;
    }
  }
  double a = lo + std::max(0, best - 1) * h;
  double b = lo + std::min(n_coarse, best + 1) * h;

  // Golden-section refinement of the winning bracket.
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int r = 0; r < refine_rounds && (b - a) > 1e-15; ++r) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace crgames::specfun
