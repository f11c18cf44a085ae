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

#include "crgames/two_type.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crgames/errors.hpp"
#include "crgames/single_type.hpp"
#include "crgames/specfun.hpp"

namespace crgames {

using specfun::binom_pmf;
using specfun::poisson_cdf;
using specfun::poisson_pmf;

void TwoTypeConfig::validate() const {
  if (!(rate1 > 0.0) || !(rate2 > 0.0)) {
    throw std::invalid_argument("TwoTypeConfig: rates must be > 0");
  }
  if (k1 < 0 || k2 < 0) {
    throw std::invalid_argument("TwoTypeConfig: k_max must be >= 0");
  }
  if (is_poisson()) {
    const auto& pop = poisson();
    if (!(pop.lambda > 0.0)) {
      throw std::invalid_argument("TwoTypeConfig: lambda <= 0");
    }
    if (!(pop.r1 > 0.0 && pop.r1 < 1.0)) {
      throw std::invalid_argument("TwoTypeConfig: r1 must lie in (0,1)");
    }
  } else {
    if (fixed().n1 < 1 || fixed().n2 < 0) {
      throw std::invalid_argument("TwoTypeConfig: bad population sizes");
    }
  }
}

double FrontierSegment::p2_at(double p1) const {
  double v;
  if (p1 <= knee.p1) {
    v = left.p2 + m1 * p1;
  } else {
    v = m2 * (p1 - right.p1);
  }
  return std::clamp(v, 0.0, 1.0);
}

std::pair<Prob, Prob> pnc_two_types_fixed(Prob p1, Prob p2,
                                          const TwoTypeConfig& cfg) {
  cfg.validate();
  const auto& pop = cfg.fixed();

  // P(B(na, pa) + B(nb, pb) <= k) by direct convolution of the two pmfs.
  auto tail = [](int na, Prob pa, int nb, Prob pb, int k) {
    double acc = 0.0;
    for (int i = 0; i <= std::min(k, na); ++i) {
      double wa = binom_pmf(i, na, pa);
      for (int j = 0; j <= std::min(k - i, nb); ++j) {
        acc += wa * binom_pmf(j, nb, pb);
      }
    }
    return acc;
  };

  double nc1 = p1 * tail(pop.n1 - 1, p1, pop.n2, p2, cfg.k1);
  double nc2 = p2 * tail(pop.n2 - 1, p2, pop.n1, p1, cfg.k2);
  return {Prob::Clamped(nc1), Prob::Clamped(nc2)};
}

std::pair<Prob, Prob> pnc_two_types_poisson(Prob p1, Prob p2,
                                            const TwoTypeConfig& cfg) {
  cfg.validate();
  const auto& pop = cfg.poisson();
  double mean_on = pop.lambda * (pop.r1 * p1 + (1.0 - pop.r1) * p2);
  double nc1 = p1 * poisson_cdf(cfg.k1, mean_on);
  double nc2 = p2 * poisson_cdf(cfg.k2, mean_on);
  return {Prob::Clamped(nc1), Prob::Clamped(nc2)};
}

namespace {

// Per-type weight: mass for "fewer than x type-n players exist" plus the
// probability that exactly x type-n players transmit. Kept for comparison
// runs only.
double script_p(int x, double mean, Prob p) {
  double acc = 0.0;
  for (int s = 0; s < x; ++s) acc += poisson_pmf(s, mean);
  int horizon = specfun::poisson_horizon(mean);
  for (int l = x; l <= horizon; ++l) {
    acc += binom_pmf(x, l, p) * poisson_pmf(l, mean);
  }
  return acc;
}

}  // namespace

std::pair<double, double> pnc_two_types_poisson_diag(Prob p1, Prob p2,
                                                     const TwoTypeConfig& cfg) {
  cfg.validate();
  const auto& pop = cfg.poisson();
  double m1 = pop.lambda * pop.r1;
  double m2 = pop.lambda * (1.0 - pop.r1);
  double nc1 = 0.0, nc2 = 0.0;
  for (int j = 0; j <= cfg.k1; ++j) {
    for (int i = 0; i <= j; ++i) {
      nc1 += script_p(i, m1, p1) * script_p(j - i, m2, p2);
    }
  }
  for (int j = 0; j <= cfg.k2; ++j) {
    for (int i = 0; i <= j; ++i) {
      nc2 += script_p(j - i, m1, p1) * script_p(i, m2, p2);
    }
  }
  return {nc1, nc2};
}

namespace {

FrontierSegment frontier_from_anchors(double a2, double mid, double b1) {
  // a2: p2 intercept; mid: equal-probability optimum; b1: p1 intercept.
  if (!(mid > 0.0) || !(a2 > mid) || !(b1 > mid)) {
    throw InfeasibleError(
        "pareto_frontier: degenerate anchor ordering (need the joint "
        "optimum below both single-type optima)");
  }
  FrontierSegment f;
  f.left = {0.0, a2};
  f.knee = {mid, mid};
  f.right = {b1, 0.0};
  f.m1 = (mid - a2) / mid;
  f.m2 = -mid / (b1 - mid);
  if (!(f.m1 < 0.0 && f.m2 < 0.0)) {
    throw InfeasibleError("pareto_frontier: non-negative slope");
  }
  return f;
}

}  // namespace

FrontierSegment pareto_frontier_fixed(const TwoTypeConfig& cfg) {
  cfg.validate();
  if (cfg.is_poisson()) {
    throw std::invalid_argument("pareto_frontier_fixed: Poisson config");
  }
  const auto& pop = cfg.fixed();
  double kbar = 0.5 * (cfg.k1 + cfg.k2);
  double a2 = p_opt_fixedN(pop.n2, cfg.k2);
  double b1 = p_opt_fixedN(pop.n1, cfg.k1);
  double mid = (1.0 + kbar) / (pop.n1 + pop.n2 + kbar);
  return frontier_from_anchors(a2, mid, b1);
}

FrontierSegment pareto_frontier_poisson(const TwoTypeConfig& cfg) {
  cfg.validate();
  if (!cfg.is_poisson()) {
    throw std::invalid_argument("pareto_frontier_poisson: fixed config");
  }
  const auto& pop = cfg.poisson();
  double kbar = 0.5 * (cfg.k1 + cfg.k2);
  double a2 = p_opt_poisson((1.0 - pop.r1) * pop.lambda, cfg.k2);
  double b1 = p_opt_poisson(pop.r1 * pop.lambda, cfg.k1);
  double mid = (1.0 + kbar) / (pop.lambda + kbar);
  return frontier_from_anchors(a2, mid, b1);
}

FrontierSegment pareto_frontier(const TwoTypeConfig& cfg) {
  return cfg.is_poisson() ? pareto_frontier_poisson(cfg)
                          : pareto_frontier_fixed(cfg);
}

std::vector<ParetoPoint> pareto_search(const TwoTypeConfig& cfg, int grid_n,
                                       ExecMode mode) {
  cfg.validate();
  if (grid_n < 32) throw std::invalid_argument("pareto_search: grid_n < 32");

  const long total = static_cast<long>(grid_n) * grid_n;
  std::vector<ParetoPoint> lattice(total);
  const double step = 1.0 / (grid_n - 1);

  auto eval_row = [&](int i) {
    Prob p1 = Prob::Clamped(i * step);
    for (int j = 0; j < grid_n; ++j) {
      Prob p2 = Prob::Clamped(j * step);
      auto [nc1, nc2] = cfg.is_poisson() ? pnc_two_types_poisson(p1, p2, cfg)
                                         : pnc_two_types_fixed(p1, p2, cfg);
      lattice[static_cast<long>(i) * grid_n + j] = {
          p1, p2, cfg.rate1 * nc1, cfg.rate2 * nc2};
    }
  };

  if (mode == ExecMode::kParallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid_n; ++i) eval_row(i);
  } else {
    for (int i = 0; i < grid_n; ++i) eval_row(i);
  }

  // Dominance filter: sweep by decreasing U1 (ties broken by decreasing
  // U2, then lattice order for determinism); a point survives iff its U2
  // strictly exceeds every U2 seen so far.
  std::vector<long> order(total);
  for (long i = 0; i < total; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](long a, long b) {
    if (lattice[a].u1 != lattice[b].u1) return lattice[a].u1 > lattice[b].u1;
    if (lattice[a].u2 != lattice[b].u2) return lattice[a].u2 > lattice[b].u2;
    return a < b;
  });

  std::vector<ParetoPoint> front;
  double best_u2 = -1.0;
  for (long idx : order) {
    const ParetoPoint& pt = lattice[idx];
    if (pt.u2 > best_u2) {
      front.push_back(pt);
      best_u2 = pt.u2;
    }
  }
  std::reverse(front.begin(), front.end());  // ascending U1
  return front;
}

std::pair<double, double> penalties_two_types(Prob p1, Prob p2,
                                              const TwoTypeConfig& cfg) {
  auto [nc1, nc2] = cfg.is_poisson() ? pnc_two_types_poisson(p1, p2, cfg)
                                     : pnc_two_types_fixed(p1, p2, cfg);
  if (nc1 >= 1.0 || nc2 >= 1.0) {
    throw InfeasibleError(
        "penalties_two_types: non-collision probability of 1 needs an "
        "infinite penalty");
  }
  return {nc1 / (1.0 - nc1), nc2 / (1.0 - nc2)};
}

}  // namespace crgames
