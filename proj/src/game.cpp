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

#include "crgames/game.hpp"

#include <cmath>
#include <stdexcept>

#include "crgames/specfun.hpp"

namespace crgames {

GameSpec::GameSpec(PopulationModel population, std::vector<TypeSpec> types)
    : population_(std::move(population)), types_(std::move(types)) {
  if (types_.empty()) throw std::invalid_argument("GameSpec: no types");
  double total_r = 0.0;
  for (const TypeSpec& t : types_) {
    if (!(t.r >= 0.0 && t.r <= 1.0)) {
      throw std::invalid_argument("GameSpec: type probability out of [0,1]");
    }
    if (!(t.rate > 0.0)) throw std::invalid_argument("GameSpec: rate <= 0");
    if (t.k_max < 0) throw std::invalid_argument("GameSpec: k_max < 0");
    if (t.penalty < 0.0) throw std::invalid_argument("GameSpec: penalty < 0");
    total_r += t.r;
  }
  if (std::fabs(total_r - 1.0) > 1e-12) {
    throw std::invalid_argument("GameSpec: type probabilities must sum to 1");
  }
  if (const auto* fixed = std::get_if<FixedPopulation>(&population_)) {
    if (fixed->n < 1) throw std::invalid_argument("GameSpec: N < 1");
    if (types_.size() > 1) {
      throw std::invalid_argument(
          "GameSpec: fixed populations support a single type; use "
          "TwoTypeConfig for fixed two-type games");
    }
  } else {
    const auto& poisson = std::get<PoissonPopulation>(population_);
    if (!(poisson.lambda > 0.0)) {
      throw std::invalid_argument("GameSpec: lambda <= 0");
    }
    if (specfun::poisson_pmf(0, poisson.lambda) >= 0.01) {
      warnings_.push_back(
          "lambda is small: P(no players) >= 1%, population-uncertainty "
          "results degrade");
    }
  }
}

bool GameSpec::is_poisson() const {
  return std::holds_alternative<PoissonPopulation>(population_);
}

double GameSpec::lambda() const {
  return std::get<PoissonPopulation>(population_).lambda;
}

int GameSpec::fixed_n() const {
  return std::get<FixedPopulation>(population_).n;
}

double payoff(const TypeSpec& type, Action action,
              const ActionProfile& others) {
  if (action == Action::kOff) return 0.0;
  return others.on <= type.k_max ? type.rate : -type.penalty * type.rate;
}

namespace {

double tau_on(const GameSpec& game, const MixedStrategy& sigma) {
  if (sigma.p.size() != game.num_types()) {
    throw std::invalid_argument("MixedStrategy: one entry per type required");
  }
  double tau = 0.0;
  for (size_t t = 0; t < game.num_types(); ++t) {
    tau += game.types()[t].r * sigma.p[t];
  }
  return tau;
}

}  // namespace

double effective_on_rate(const GameSpec& game, const MixedStrategy& sigma) {
  double scale = game.is_poisson() ? game.lambda()
                                   : static_cast<double>(game.fixed_n());
  return scale * tau_on(game, sigma);
}

double expected_utility(const GameSpec& game, size_t type_index, Action action,
                        const MixedStrategy& sigma) {
  if (type_index >= game.num_types()) {
    throw std::invalid_argument("expected_utility: bad type index");
  }
  if (action == Action::kOff) return 0.0;
  const TypeSpec& type = game.types()[type_index];

  double p_success;  // P(other transmitters <= k_max)
  if (game.is_poisson()) {
    double mean_others = game.lambda() * tau_on(game, sigma);
    p_success = specfun::poisson_cdf(type.k_max, mean_others);
  } else {
    p_success =
        specfun::binom_cdf(type.k_max, game.fixed_n() - 1, sigma.p[0]);
  }
  return type.rate * p_success - type.penalty * type.rate * (1.0 - p_success);
}

double mixed_utility(const GameSpec& game, size_t type_index,
                     const MixedStrategy& sigma) {
  return sigma.p[type_index] *
         expected_utility(game, type_index, Action::kOn, sigma);
}

BestResponseSet best_response_set(const GameSpec& game, size_t type_index,
                                  const MixedStrategy& sigma,
                                  const Tolerance& tol) {
  double u_on = expected_utility(game, type_index, Action::kOn, sigma);
  constexpr double u_off = 0.0;
  BestResponseSet set;
  if (std::fabs(u_on - u_off) <= tol.abs_tol) {
    set.on = set.off = true;
  } else if (u_on > u_off) {
    set.on = true;
  } else {
    set.off = true;
  }
  return set;
}

bool is_nash(const GameSpec& game, const MixedStrategy& sigma,
             const Tolerance& tol) {
  for (size_t t = 0; t < game.num_types(); ++t) {
    BestResponseSet br = best_response_set(game, t, sigma, tol);
    if (sigma.p[t] > tol.abs_tol && !br.on) return false;
    if (1.0 - sigma.p[t] > tol.abs_tol && !br.off) return false;
  }
  return true;
}

}  // namespace crgames
