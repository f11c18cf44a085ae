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

#ifndef CRGAMES_RNG_HPP_
#define CRGAMES_RNG_HPP_

#include <cmath>
#include <cstdint>

// Seeded PRNG for deterministic Monte Carlo. SplitMix64 core: the output
// sequence depends only on the 64-bit seed, never on the standard library,
// so results reproduce bit-exactly across compilers and platforms.
// Shard streams are derived with Split(seed, shard), which feeds the shard
// index through the same mixer; distinct shards get decorrelated streams.

namespace crgames {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t NextU64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Uniform integer in [0, n-1]; n >= 1. Rejection-free modulo is fine
  // here since n is tiny relative to 2^64.
  uint64_t Below(uint64_t n) { return NextU64() % n; }

  // Poisson sample by CDF inversion. Cost is O(lambda) per draw, which is
  // the right trade for the lambdas (<= a few hundred) this library uses.
  int Poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    double u = Uniform01();
    double pmf = std::exp(-lambda);
    double cdf = pmf;
    int k = 0;
    // Hard stop far in the tail guards against u ~ 1 with accumulated
    // roundoff in cdf.
    int cap = static_cast<int>(lambda + 20.0 * std::sqrt(lambda) + 30.0);
    while (u > cdf && k < cap) {
      ++k;
      pmf *= lambda / k;
      cdf += pmf;
    }
    return k;
  }

  int Binomial(int n, double p) {
    int k = 0;
    for (int i = 0; i < n; ++i) k += Bernoulli(p) ? 1 : 0;
    return k;
  }

  // Deterministic per-shard seed derivation.
  static uint64_t Split(uint64_t seed, uint64_t stream) {
    Rng mixer(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    return mixer.NextU64();
  }

 private:
  uint64_t state_;
};

}  // namespace crgames

#endif  // CRGAMES_RNG_HPP_
