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

#ifndef CRGAMES_PU_ACTIVITY_HPP_
#define CRGAMES_PU_ACTIVITY_HPP_

#include <optional>
#include <vector>

#include "crgames/prob.hpp"
#include "crgames/rng.hpp"
#include "crgames/two_type.hpp"

// Primary-user activity: a Gilbert-Elliot ON/OFF chain, the induced
// SU-to-PU collision constraint, collision-limited transmit probabilities
// and the restriction frontier they carve out of the strategy space.
//
// Collision accounting: secondary users sense the PU perfectly and stay
// silent while it is ON, so a collision can only happen in the first ON
// slot after an OFF period, when the SUs have not yet noticed the switch.

namespace crgames {

// Two-state Markov chain: ON with stationary probability p_t, time
// correlation rho. q and r are the OFF->ON and ON->OFF transition
// probabilities; n_on_bar = 1/r is the mean ON dwell in slots.
struct GEModel {
  double p_t = 0.5;
  double rho = 0.0;
  double q = 0.5;
  double r = 0.5;
  double n_on_bar = 2.0;
};

GEModel ge_derive(Prob p_t, Prob rho);

// One chain step; returns the next state.
inline bool ge_step(const GEModel& ge, bool on, Rng& rng) {
  return on ? !rng.Bernoulli(ge.r) : rng.Bernoulli(ge.q);
}

// Maximum tolerable collision probability and the derived budget
// n_on_bar * p_col_th that bounds P(any SU transmits).
struct CollisionBudget {
  double p_col_th = 0.0;
  double budget = 0.0;

  static CollisionBudget FromThreshold(const GEModel& ge, Prob p_col_th) {
    return {p_col_th, ge.n_on_bar * p_col_th};
  }
  static CollisionBudget FromBudget(double budget) {
    return {budget, budget};  // drop the chain scaling; threshold == budget
  }
};

// Average SU->PU collision probability P_SU,T / n_on_bar.
Prob pu_collision_prob(Prob p_su_t, const GEModel& ge);

// P(at least one of N SUs transmits) = 1 - (1-p)^N.
Prob p_su_t_fixedN(Prob p, int n);

// Largest per-SU transmit probability honoring the budget:
// p* = 1 - (1 - budget)^(1/N). Empty when budget >= 1 (unconstrained).
std::optional<Prob> p_star_fixedN(int n, const CollisionBudget& budget);

struct ConstrainedOpt {
  double p = 0.0;
  bool collision_limited = false;  // true when p*(N) is the binding branch
};

// min(p*(N), (k_max+1)/(k_max+N)), with the binding branch flagged.
ConstrainedOpt p_opt_constrained_fixedN(int n, int k_max,
                                        const CollisionBudget& budget);

struct PStarPoisson {
  bool constrained = true;  // false when budget >= 1
  double series = 1.0;      // population-averaged p*(k), k >= 1
  double taylor = 1.0;      // large-lambda closed form 1 - (1-b)^(1/lambda)
  double rel_deviation = 0.0;
};

// Collision-limited probability for a Poisson population of mean lambda.
// The exact series averages p*(k) over k >= 1 (an empty game cannot
// collide; mass renormalized accordingly). The closed form keeps the first
// two Taylor terms of p*(k) around k = lambda, whose population average is
// 1 - (1-budget)^(1/lambda).
PStarPoisson p_star_poisson(double lambda, const CollisionBudget& budget);

// Straight line between (p1*, 0) and (0, p2*), the extreme strategy pairs
// that meet the budget with equality. Empty when budget >= 1.
std::optional<FrontierSegment> restriction_frontier(
    const TwoTypeConfig& cfg, const CollisionBudget& budget);

enum class Regime { kRestrictionBinding, kParetoBinding, kMixed };

struct RegionClassification {
  Regime regime = Regime::kParetoBinding;
  // Recommended operating curve: pointwise minimum of the two frontiers
  // over the shared p1 range.
  std::vector<Point2> operating_curve;
};

// Compares the restriction frontier against a Pareto frontier and reports
// which one binds (or that they cross), plus the operating curve.
RegionClassification admissible_region(const TwoTypeConfig& cfg,
                                       const CollisionBudget& budget,
                                       const FrontierSegment& pareto,
                                       int samples = 512);

}  // namespace crgames

#endif  // CRGAMES_PU_ACTIVITY_HPP_
