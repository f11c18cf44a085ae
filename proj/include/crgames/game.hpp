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

#ifndef CRGAMES_GAME_HPP_
#define CRGAMES_GAME_HPP_

#include <string>
#include <variant>
#include <vector>

#include "crgames/prob.hpp"

// Random-access game with action set {ON, OFF}: a population of players
// (fixed count or Poisson), each of a type with its own rate payoff, MPR
// tolerance and collision penalty. A player who stays OFF gets 0. A player
// who turns ON gets R if at most k_max other players are ON, and -penalty*R
// otherwise.

namespace crgames {

enum class Action { kOff = 0, kOn = 1 };

struct FixedPopulation {
  int n = 2;
};

struct PoissonPopulation {
  double lambda = 1.0;
};

using PopulationModel = std::variant<FixedPopulation, PoissonPopulation>;

struct TypeSpec {
  double r = 1.0;      // probability that a player has this type
  double rate = 1.0;   // payoff R on success
  int k_max = 0;       // tolerated simultaneous other transmitters
  double penalty = 0;  // collision penalty, in units of rate
};

// Per-type transmit probabilities sigma_t(ON).
struct MixedStrategy {
  std::vector<Prob> p;

  static MixedStrategy Uniform(double value, size_t types = 1) {
    return MixedStrategy{std::vector<Prob>(types, Prob(value))};
  }
};

// Realized counts of players per action, excluding the observer.
struct ActionProfile {
  long on = 0;
  long off = 0;
};

class GameSpec {
 public:
  GameSpec(PopulationModel population, std::vector<TypeSpec> types);

  const PopulationModel& population() const { return population_; }
  const std::vector<TypeSpec>& types() const { return types_; }
  size_t num_types() const { return types_.size(); }

  bool is_poisson() const;
  double lambda() const;  // Poisson populations only
  int fixed_n() const;    // fixed populations only

  // Non-fatal modelling caveats (e.g. lambda so small that an empty game
  // is likely).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  PopulationModel population_;
  std::vector<TypeSpec> types_;
  std::vector<std::string> warnings_;
};

// Pure payoff u_t(a, x) given the other players' action profile.
double payoff(const TypeSpec& type, Action action, const ActionProfile& others);

// Mean number of transmitters per slot, lambda * tau(ON) (or N * tau(ON)
// for a fixed population).
double effective_on_rate(const GameSpec& game, const MixedStrategy& sigma);

// Expected utility of playing `action` while everybody else follows
// `sigma`. OFF is exactly 0. For ON the count of other transmitters is
// Poisson(lambda tau) for Poisson populations (environmental equivalence)
// and Binomial(N-1, p) for a fixed single-type population.
double expected_utility(const GameSpec& game, size_t type_index, Action action,
                        const MixedStrategy& sigma);

// Expected utility of following the mixed strategy itself:
// sigma_t(ON) * U_t(ON, sigma).
double mixed_utility(const GameSpec& game, size_t type_index,
                     const MixedStrategy& sigma);

struct BestResponseSet {
  bool on = false;
  bool off = false;
};

// Pure best responses for a type against sigma; both actions when the
// utilities are within tol.abs_tol of each other.
BestResponseSet best_response_set(const GameSpec& game, size_t type_index,
                                  const MixedStrategy& sigma,
                                  const Tolerance& tol = Tolerance());

// sigma is a Nash equilibrium iff every action a type plays with
// probability > tol.abs_tol is a best response.
bool is_nash(const GameSpec& game, const MixedStrategy& sigma,
             const Tolerance& tol = Tolerance());

}  // namespace crgames

#endif  // CRGAMES_GAME_HPP_
