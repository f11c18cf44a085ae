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

#ifndef CRGAMES_TWO_TYPE_HPP_
#define CRGAMES_TWO_TYPE_HPP_

#include <utility>
#include <variant>
#include <vector>

#include "crgames/prob.hpp"

// Games with two classes of users (different rates and MPR tolerances):
// per-type non-collision probabilities, piecewise-linear analytic Pareto
// frontiers, an exhaustive lattice Pareto search (the oracle the analytic
// frontier is validated against) and the penalty pair (alpha, beta).

namespace crgames {

struct FixedTwoType {
  int n1 = 2;
  int n2 = 2;
};

struct PoissonTwoType {
  double lambda = 1.0;
  double r1 = 0.5;  // type-1 share; r2 = 1 - r1
};

struct TwoTypeConfig {
  std::variant<FixedTwoType, PoissonTwoType> population;
  double rate1 = 1.0;
  double rate2 = 1.0;
  int k1 = 0;
  int k2 = 0;

  bool is_poisson() const {
    return std::holds_alternative<PoissonTwoType>(population);
  }
  const FixedTwoType& fixed() const { return std::get<FixedTwoType>(population); }
  const PoissonTwoType& poisson() const {
    return std::get<PoissonTwoType>(population);
  }
  void validate() const;
};

struct Point2 {
  double p1 = 0.0;
  double p2 = 0.0;
};

// Piecewise-linear frontier in (p1, p2) space:
//   p2 = left.p2 + m1 * p1          for p1 in [0, knee.p1]
//   p2 = m2 * (p1 - right.p1)       for p1 in [knee.p1, right.p1]
// A plain straight line (restriction frontiers) has m1 == m2 and the knee
// at the midpoint.
struct FrontierSegment {
  double m1 = 0.0;
  double m2 = 0.0;
  Point2 knee;
  Point2 left;   // (0, p2 intercept)
  Point2 right;  // (p1 intercept, 0)

  // Frontier height at p1, clamped to [0, 1]; p1 outside [0, right.p1]
  // maps to the nearest endpoint value.
  double p2_at(double p1) const;
};

struct ParetoPoint {
  double p1 = 0.0;
  double p2 = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
};

enum class ExecMode { kSerial, kParallel };

// P(type-t player transmits without collision), exact convolution of the
// two interferer counts: pnc1 = p1 * P(B(N1-1, p1) + B(N2, p2) <= k1) and
// symmetrically for type 2.
std::pair<Prob, Prob> pnc_two_types_fixed(Prob p1, Prob p2,
                                          const TwoTypeConfig& cfg);

// Poisson-population counterpart via thinning: the other transmitters of
// either type form one Poisson stream with mean lambda (r1 p1 + r2 p2).
std::pair<Prob, Prob> pnc_two_types_poisson(Prob p1, Prob p2,
                                            const TwoTypeConfig& cfg);

// Alternative per-type double sum built from the per-type transmitter
// counts (diagnostic only; the thinning form above is authoritative).
std::pair<double, double> pnc_two_types_poisson_diag(Prob p1, Prob p2,
                                                     const TwoTypeConfig& cfg);

// Analytic Pareto frontier through the three anchor points given by the
// single-type optima and the equal-probability optimum. Throws
// InfeasibleError for degenerate configurations (anchors out of order or
// non-negative slopes).
FrontierSegment pareto_frontier_fixed(const TwoTypeConfig& cfg);
FrontierSegment pareto_frontier_poisson(const TwoTypeConfig& cfg);
FrontierSegment pareto_frontier(const TwoTypeConfig& cfg);

// Exhaustive Pareto search over a grid_n x grid_n lattice of (p1, p2):
// evaluates (U1, U2) = (R1 Pnc1, R2 Pnc2) everywhere and keeps the
// nondominated subset, sorted by increasing U1. Deterministic regardless
// of execution mode.
std::vector<ParetoPoint> pareto_search(const TwoTypeConfig& cfg, int grid_n,
                                       ExecMode mode = ExecMode::kParallel);

// Penalties that make a frontier point an equilibrium:
// alpha = Pnc1/(1-Pnc1), beta = Pnc2/(1-Pnc2). Throws InfeasibleError if
// either non-collision probability reaches 1.
std::pair<double, double> penalties_two_types(Prob p1, Prob p2,
                                              const TwoTypeConfig& cfg);

}  // namespace crgames

#endif  // CRGAMES_TWO_TYPE_HPP_
