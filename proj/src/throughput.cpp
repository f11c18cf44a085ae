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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crgames/rng.hpp"
#include "crgames/single_type.hpp"
#include "crgames/specfun.hpp"

namespace crgames {

using specfun::binom_pmf;
using specfun::poisson_pmf;

ThroughputResult throughput_fixedN(int n, int k_max, Prob p) {
  if (n < 1) throw std::domain_error("throughput_fixedN: N < 1");
  if (k_max < 0) throw std::domain_error("throughput_fixedN: k_max < 0");
  ThroughputResult out;
  out.p_tx = -std::expm1(n * std::log1p(-p.value()));
  int top = std::min(k_max + 1, n);
  out.components.resize(top, 0.0);
  for (int k = 1; k <= top; ++k) {
    double term = k * binom_pmf(k, n, p);
    out.components[k - 1] = term;
    out.value += term;
  }
  return out;
}

ThroughputResult throughput_poisson(double lambda, int k_max) {
  if (!(lambda > 0.0)) throw std::domain_error("throughput_poisson: lambda");
  if (k_max < 0) throw std::domain_error("throughput_poisson: k_max < 0");
  Prob p = p_opt_poisson(lambda, k_max);
  int horizon = specfun::poisson_horizon(lambda);

  ThroughputResult out;
  out.components.resize(k_max + 1, 0.0);
  // Populations small enough to all fit transmit outright: n packets/slot.
  for (int n = 1; n <= k_max; ++n) {
    out.components[n - 1] += n * poisson_pmf(n, lambda);
  }
  // Larger populations thin themselves with p; k of n transmitters get
  // through while k <= k_max + 1.
  for (int n = k_max + 1; n <= horizon; ++n) {
    double mass = poisson_pmf(n, lambda);
    for (int k = 1; k <= std::min(k_max + 1, n); ++k) {
      out.components[k - 1] += mass * k * binom_pmf(k, n, p);
    }
  }
  for (double c : out.components) out.value += c;

  // P(at least one transmitter): small populations always transmit.
  double none = 0.0;
  none += poisson_pmf(0, lambda);
  for (int n = k_max + 1; n <= horizon; ++n) {
    none += poisson_pmf(n, lambda) * std::exp(n * std::log1p(-p.value()));
  }
  out.p_tx = 1.0 - none;
  return out;
}

ThroughputResult backoff_throughput(const BackoffConfig& cfg) {
  if (cfg.n < 1) throw std::domain_error("backoff_throughput: N < 1");
  if (cfg.w0 < 1) throw std::domain_error("backoff_throughput: W0 < 1");
  if (cfg.max_stage < 1) throw std::domain_error("backoff_throughput: stage");
  if (cfg.slots < 1) throw std::domain_error("backoff_throughput: slots");

  Rng rng(Rng::Split(cfg.seed, 0x6265626fULL));  // tag the backoff stream
  std::vector<int> stage(cfg.n, 0);
  std::vector<long> counter(cfg.n);
  auto window = [&](int s) { return static_cast<long>(cfg.w0) << s; };
  for (int i = 0; i < cfg.n; ++i) {
    counter[i] = static_cast<long>(rng.Below(window(0)));
  }

  std::vector<int> tx;
  tx.reserve(cfg.n);
  double sum = 0.0, sum_sq = 0.0;
  for (long slot = 0; slot < cfg.slots; ++slot) {
    tx.clear();
    for (int i = 0; i < cfg.n; ++i) {
      if (counter[i] == 0) tx.push_back(i);
    }
    long delivered = 0;
    if (!tx.empty()) {
      bool success = static_cast<int>(tx.size()) <= cfg.k_max + 1;
      if (success) delivered = static_cast<long>(tx.size());
      for (int i : tx) {
        stage[i] = success ? 0 : std::min(stage[i] + 1, cfg.max_stage);
        counter[i] = static_cast<long>(rng.Below(window(stage[i])));
      }
    }
    for (int i = 0; i < cfg.n; ++i) {
      if (counter[i] > 0 &&
          std::find(tx.begin(), tx.end(), i) == tx.end()) {
        --counter[i];
      }
    }
    sum += delivered;
    sum_sq += static_cast<double>(delivered) * delivered;
  }

  ThroughputResult out;
  out.value = sum / cfg.slots;
  double var = (sum_sq - sum * sum / cfg.slots) / std::max(1L, cfg.slots - 1);
  out.stderr_ = std::sqrt(std::max(0.0, var) / cfg.slots);
  return out;
}

}  // namespace crgames
