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

#ifndef CRGAMES_POPULATION_HPP_
#define CRGAMES_POPULATION_HPP_

#include <vector>

#include "crgames/prob.hpp"

namespace crgames {

// Distribution of the number of players. Three flavors: Poisson(lambda)
// (kept symbolic so closed forms apply), a point mass at N0 (complete
// information), and an arbitrary finite table.
class PopulationPmf {
 public:
  enum class Kind { kPoisson, kDegenerate, kTable };

  static PopulationPmf Poisson(double lambda);
  static PopulationPmf Degenerate(int n0);
  // table[n] = P(N = n), starting at n = 0; must sum to 1 within 1e-9.
  static PopulationPmf FromTable(std::vector<double> table);

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  int n0() const { return n0_; }

  double pmf(int n) const;
  double zero_mass() const;  // P(N = 0)
  double mean() const;

  // Largest n worth summing to (tail beyond is < 1e-12).
  int horizon() const;

 private:
  PopulationPmf() = default;

  Kind kind_ = Kind::kDegenerate;
  double lambda_ = 0.0;
  int n0_ = 1;
  std::vector<double> table_;
};

}  // namespace crgames

#endif  // CRGAMES_POPULATION_HPP_
