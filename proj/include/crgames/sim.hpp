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

#ifndef CRGAMES_SIM_HPP_
#define CRGAMES_SIM_HPP_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "crgames/game.hpp"
#include "crgames/pu_activity.hpp"
#include "crgames/two_type.hpp"

// Slot-level Monte-Carlo engine. Serves as the independent oracle for the
// analytic modules: every probability and throughput formula in the
// library has a counterpart here that samples it directly.
//
// Reproducibility contract: a run is split into a fixed number of shards
// (independent of thread count), each driven by an Rng stream derived from
// (seed, shard index), and shard results are merged in shard order. The
// report is therefore bit-identical between serial and OpenMP execution
// and across machines.

namespace crgames {

enum class PopulationRedraw {
  kPerSlot,        // fresh Poisson draw every slot (one-shot game repeated)
  kFixedEpisode,   // drawn once per shard, then held
};

struct SimConfig {
  std::variant<GameSpec, TwoTypeConfig> game;
  MixedStrategy strategy;           // one entry per type
  std::optional<GEModel> pu;        // primary-user chain, if any
  long slots = 100000;
  uint64_t seed = 1;
  PopulationRedraw redraw = PopulationRedraw::kPerSlot;
  // TwoTypeConfig carries no penalties of its own (they are derived from a
  // frontier point); set them here to simulate the penalized two-type game.
  std::optional<std::pair<double, double>> two_type_penalties;
};

struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;
};

struct TypeReport {
  Estimate utility;      // mean payoff per transmission attempt
  double p_nc = 0.0;     // successes / player-slots
  double p_c = 0.0;      // collisions / player-slots
  double p_tx = 0.0;     // attempts / player-slots
  // Shard-based standard errors for the frequencies above. Outcomes of
  // players sharing a slot are correlated (they collide together), so
  // these are wider than the naive binomial stderr.
  Estimate p_nc_est;
  Estimate p_c_est;
  long attempts = 0;
  long successes = 0;
  double player_slots = 0.0;
};

struct SimReport {
  Estimate throughput;   // delivered packets per slot (all types)
  std::vector<TypeReport> per_type;
  Estimate pu_collision_rate;  // collisions / PU ON slots
  Estimate p_any_tx;           // P(at least one SU transmission per slot)
  long slots_on = 0;
  long off_on_transitions = 0;
  long slots_with_tx = 0;      // slots with at least one SU transmission
  long slots = 0;
  uint64_t seed = 0;
};

SimReport run(const SimConfig& config, ExecMode mode = ExecMode::kParallel);

// --- analytic-formula oracles -----------------------------------------

enum class McEvent { kPnc, kPc, kPsut };

// Frequency estimate of the event under `config` over `trials` slots, with
// binomial standard error. kPnc / kPc are per player-slot frequencies for
// type 0; kPsut is the per-slot frequency of >= 1 transmission.
Estimate mc_probability(McEvent event, const SimConfig& config, long trials);

// Empirical packets/slot of the Poisson-population game at the optimal
// strategy (populations of size <= k_max transmit outright, larger ones
// use the closed-form optimum), matching throughput_poisson term by term.
Estimate mc_poisson_game_throughput(double lambda, int k_max, long slots,
                                    uint64_t seed,
                                    ExecMode mode = ExecMode::kParallel);

// --- equilibrium dynamics ----------------------------------------------

struct TraceStep {
  int iteration = 0;
  std::vector<double> p;     // strategy per type
  std::vector<double> u_on;  // U_ON per type at that strategy
};

struct ConvergenceTrace {
  std::vector<TraceStep> steps;
  bool converged = false;
};

// Damped indifference-gradient iteration
//   p_{i+1,t} = clamp(p_{i,t} + step * U_ON,t(p_i) / R_t, 0, 1),
// stopping once max_t |U_ON,t| <= tol.abs_tol * R_t. Its fixed points are
// exactly the mixed equilibria (indifference points) of the game.
ConvergenceTrace best_response_dynamics(const GameSpec& game,
                                        const MixedStrategy& p0, double step,
                                        int iterations,
                                        const Tolerance& tol = Tolerance());

}  // namespace crgames

#endif  // CRGAMES_SIM_HPP_
