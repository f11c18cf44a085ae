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

#ifndef CRGAMES_THROUGHPUT_HPP_
#define CRGAMES_THROUGHPUT_HPP_

#include <cstdint>
#include <vector>

#include "crgames/prob.hpp"

// Normalized throughput (successful packets per slot) of the penalized
// random-access game, plus a saturated binary-exponential-backoff baseline
// simulated under the same MPR success rule: a slot with k simultaneous
// transmitters delivers all k packets iff k <= k_max + 1.

namespace crgames {

struct ThroughputResult {
  double value = 0.0;      // expected successful packets per slot
  double stderr_ = 0.0;    // 0 for analytic results
  double p_tx = 0.0;       // P(at least one transmitter in a slot)
  // components[k-1] = k * P(exactly k transmitters, all successful),
  // k = 1 .. k_max+1; sums to value.
  std::vector<double> components;
};

// Fixed population of N players transmitting with probability p:
// T = sum_{k=1}^{k_max+1} k C(N,k) p^k (1-p)^{N-k}.
ThroughputResult throughput_fixedN(int n, int k_max, Prob p);

// Poisson population at the optimal strategy: populations of size
// n <= k_max transmit outright (their optimum is p = 1 and they always
// fit), larger ones use the closed-form optimum p_opt_poisson(lambda).
ThroughputResult throughput_poisson(double lambda, int k_max);

struct BackoffConfig {
  int n = 2;            // saturated stations
  int w0 = 16;          // initial contention window
  int max_stage = 6;    // window caps at w0 * 2^max_stage
  int k_max = 0;        // MPR tolerance shared with the game schemes
  long slots = 100000;  // simulated slots
  uint64_t seed = 1;
};

// Empirical packets/slot of saturated binary exponential backoff with
// multipacket reception. Deterministic per seed.
ThroughputResult backoff_throughput(const BackoffConfig& cfg);

}  // namespace crgames

#endif  // CRGAMES_THROUGHPUT_HPP_
