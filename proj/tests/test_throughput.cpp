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

#include "crgames/throughput.hpp"

#include <cmath>
#include <numeric>

#include "crgames/single_type.hpp"
#include "crgames/specfun.hpp"
#include "doctest.h"

using namespace crgames;

namespace {

// Brute-force oracle: walk all 2^N transmit patterns and accumulate the
// exact delivered-packet expectation and per-player success probability.
struct Enumerated {
  double throughput = 0.0;
  double pnc = 0.0;  // P(player 0 transmits successfully)
};

Enumerated enumerate_patterns(int n, int k_max, double p) {
  Enumerated out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int tx = __builtin_popcount(mask);
    double weight = std::pow(p, tx) * std::pow(1.0 - p, n - tx);
    bool success = tx <= k_max + 1;
    if (success) out.throughput += weight * tx;
    if ((mask & 1u) && success) out.pnc += weight;
  }
  return out;
}

}  // namespace

TEST_CASE("throughput_fixedN edge cases") {
  CHECK(throughput_fixedN(20, 3, Prob(0.0)).value == 0.0);
  // Everyone fits: the mean N p comes straight out.
  auto all_fit = throughput_fixedN(6, 7, Prob(0.3));
  CHECK(all_fit.value == doctest::Approx(6 * 0.3).epsilon(1e-12));
  // Components sum to the total.
  auto r = throughput_fixedN(20, 3, p_opt_fixedN(20, 3));
  CHECK(std::accumulate(r.components.begin(), r.components.end(), 0.0) ==
        doctest::Approx(r.value).epsilon(1e-12));
  CHECK(r.value <= 20 * p_opt_fixedN(20, 3) + 1e-12);
  CHECK(r.value <= 4.0);
  CHECK(r.p_tx == doctest::Approx(1.0 - std::pow(1.0 - 4.0 / 23.0, 20)));
}

TEST_CASE("throughput_fixedN equals exhaustive enumeration up to N = 12") {
  for (int n : {2, 5, 9, 12}) {
    for (int k : {0, 1, 3}) {
      double p = p_opt_fixedN(n, k);
      auto oracle = enumerate_patterns(n, k, p);
      CHECK(throughput_fixedN(n, k, Prob(p)).value ==
            doctest::Approx(oracle.throughput).epsilon(1e-12));
      CHECK(pnc_exact(Prob(p), n, k).value() ==
            doctest::Approx(oracle.pnc).epsilon(1e-12));
    }
  }
}

TEST_CASE("throughput_poisson trends") {
  // Vanishing traffic gives vanishing throughput.
  CHECK(throughput_poisson(0.01, 3).value < 0.02);
  // More MPR headroom, more throughput.
  double prev = 0.0;
  for (int k : {3, 5, 7}) {
    double t = throughput_poisson(15.0, k).value;
    CHECK(t > prev);
    prev = t;
  }
  // Components sum to the value.
  auto r = throughput_poisson(15.0, 5);
  CHECK(std::accumulate(r.components.begin(), r.components.end(), 0.0) ==
        doctest::Approx(r.value).epsilon(1e-12));
}

TEST_CASE("throughput_poisson against an independent mixture summation") {
  const double lambda = 15.0;
  const int k_max = 5;
  double p = p_opt_poisson(lambda, k_max);
  double expect = 0.0;
  for (int n = 1; n <= specfun::poisson_horizon(lambda); ++n) {
    double mass = specfun::poisson_pmf(n, lambda);
    if (n <= k_max) {
      expect += mass * n;  // everyone transmits and fits
      continue;
    }
    for (int k = 1; k <= std::min(k_max + 1, n); ++k) {
      expect += mass * k * specfun::binom_pmf(k, n, Prob(p));
    }
  }
  CHECK(throughput_poisson(lambda, k_max).value ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("backoff with one station matches the renewal oracle") {
  // A lone station transmits every (backoff + 1) slots; mean cycle is
  // (W0+1)/2, so throughput is 2/(W0+1).
  for (int w0 : {16, 32}) {
    BackoffConfig cfg;
    cfg.n = 1;
    cfg.w0 = w0;
    cfg.k_max = 3;
    cfg.slots = 400000;
    cfg.seed = 7;
    auto r = backoff_throughput(cfg);
    double expect = 2.0 / (w0 + 1);
    CHECK(std::fabs(r.value - expect) <= 3.0 * r.stderr_ + 1e-4);
  }
}

TEST_CASE("backoff is deterministic per seed") {
  BackoffConfig cfg;
  cfg.n = 5;
  cfg.w0 = 32;
  cfg.k_max = 3;
  cfg.slots = 20000;
  cfg.seed = 42;
  auto a = backoff_throughput(cfg);
  auto b = backoff_throughput(cfg);
  CHECK(a.value == b.value);
  CHECK(a.stderr_ == b.stderr_);
  cfg.seed = 43;
  auto c = backoff_throughput(cfg);
  CHECK(a.value != c.value);
}

TEST_CASE("game throughput beats backoff for small populations") {
  BackoffConfig cfg;
  cfg.n = 5;
  cfg.w0 = 32;
  cfg.k_max = 3;
  cfg.slots = 200000;
  cfg.seed = 11;
  double game = throughput_poisson(5.0, 3).value;
  CHECK(game > backoff_throughput(cfg).value);
}

TEST_CASE("large-N backoff throughput is bounded away from zero") {
  for (int n : {10, 40, 100}) {
    BackoffConfig cfg;
    cfg.n = n;
    cfg.w0 = 32;
    cfg.k_max = 3;
    cfg.slots = 100000;
    cfg.seed = 3;
    double t = backoff_throughput(cfg).value;
    CHECK(t > 0.1);
    CHECK(t < 4.0);
  }
}
