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

#include "crgames/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crgames/rng.hpp"
#include "crgames/single_type.hpp"

namespace crgames {

namespace {

constexpr int kShards = 64;

// One player class flattened out of GameSpec / TwoTypeConfig.
struct Group {
  bool poisson = false;
  double mean = 0.0;  // Poisson mean of the class population
  int count = 0;      // fixed class population
  double p = 0.0;
  double rate = 1.0;
  int k_max = 0;
  double penalty = 0.0;
};

std::vector<Group> flatten(const SimConfig& cfg) {
  std::vector<Group> groups;
  if (const auto* game = std::get_if<GameSpec>(&cfg.game)) {
    if (cfg.strategy.p.size() != game->num_types()) {
      throw std::invalid_argument("SimConfig: one strategy entry per type");
    }
    for (size_t t = 0; t < game->num_types(); ++t) {
      const TypeSpec& type = game->types()[t];
      Group g;
      g.poisson = game->is_poisson();
      if (g.poisson) {
        g.mean = game->lambda() * type.r;
      } else {
        g.count = game->fixed_n();
      }
      g.p = cfg.strategy.p[t];
      g.rate = type.rate;
      g.k_max = type.k_max;
      g.penalty = type.penalty;
      groups.push_back(g);
    }
  } else {
    const auto& two = std::get<TwoTypeConfig>(cfg.game);
    two.validate();
    if (cfg.strategy.p.size() != 2) {
      throw std::invalid_argument("SimConfig: two-type game needs two p's");
    }
    for (int t = 0; t < 2; ++t) {
      Group g;
      g.poisson = two.is_poisson();
      if (g.poisson) {
        double share = t == 0 ? two.poisson().r1 : 1.0 - two.poisson().r1;
        g.mean = two.poisson().lambda * share;
      } else {
        g.count = t == 0 ? two.fixed().n1 : two.fixed().n2;
      }
      g.p = cfg.strategy.p[t];
      g.rate = t == 0 ? two.rate1 : two.rate2;
      g.k_max = t == 0 ? two.k1 : two.k2;
      if (cfg.two_type_penalties.has_value()) {
        g.penalty = t == 0 ? cfg.two_type_penalties->first
                           : cfg.two_type_penalties->second;
      }
      groups.push_back(g);
    }
  }
  return groups;
}

struct TypeAccum {
  long attempts = 0;
  long successes = 0;
  double payoff = 0.0;
  double player_slots = 0.0;
};

struct ShardStats {
  long slots = 0;
  double delivered = 0.0;
  double delivered_sq = 0.0;
  long slots_with_tx = 0;
  std::vector<TypeAccum> types;
  long on_slots = 0;
  long transitions = 0;
  long collisions = 0;
};

ShardStats run_shard(const std::vector<Group>& groups, const SimConfig& cfg,
                     long slots, uint64_t shard_seed) {
  Rng rng(shard_seed);
  ShardStats st;
  st.slots = slots;
  st.types.resize(groups.size());

  // Episode populations, drawn once if requested.
  std::vector<int> episode(groups.size());
  for (size_t t = 0; t < groups.size(); ++t) {
    episode[t] = groups[t].poisson && cfg.redraw == PopulationRedraw::kFixedEpisode
                     ? rng.Poisson(groups[t].mean)
                     : groups[t].count;
  }

  // PU chain state, started from its stationary law so every shard is a
  // valid stationary segment.
  bool pu_on = false;
  if (cfg.pu.has_value()) pu_on = rng.Bernoulli(cfg.pu->p_t);

  std::vector<int> population(groups.size());
  std::vector<int> transmitters(groups.size());

  for (long slot = 0; slot < slots; ++slot) {
    // Realize this slot's population.
    for (size_t t = 0; t < groups.size(); ++t) {
      const Group& g = groups[t];
      if (!g.poisson) {
        population[t] = g.count;
      } else if (cfg.redraw == PopulationRedraw::kPerSlot) {
        population[t] = rng.Poisson(g.mean);
      } else {
        population[t] = episode[t];
      }
    }

    if (cfg.pu.has_value()) {
      bool was_on = pu_on;
      pu_on = ge_step(*cfg.pu, pu_on, rng);
      if (pu_on) {
        ++st.on_slots;
        if (!was_on) {
          ++st.transitions;
          // SUs have not yet sensed the switch: a collision happens iff
          // any of them would have transmitted this slot.
          bool any = false;
          for (size_t t = 0; t < groups.size(); ++t) {
            for (int i = 0; i < population[t] && !any; ++i) {
              any = rng.Bernoulli(groups[t].p);
            }
          }
          if (any) ++st.collisions;
        }
        continue;  // SUs silent for the whole ON period
      }
    }

    int total = 0;
    for (size_t t = 0; t < groups.size(); ++t) {
      transmitters[t] = rng.Binomial(population[t], groups[t].p);
      total += transmitters[t];
      st.types[t].player_slots += population[t];
    }
    if (total > 0) ++st.slots_with_tx;

    long delivered = 0;
    for (size_t t = 0; t < groups.size(); ++t) {
      int k = transmitters[t];
      if (k == 0) continue;
      TypeAccum& acc = st.types[t];
      acc.attempts += k;
      // A transmitter tolerates k_max others: success iff total <= k_max+1.
      if (total <= groups[t].k_max + 1) {
        acc.successes += k;
        acc.payoff += k * groups[t].rate;
        delivered += k;
      } else {
        acc.payoff -= k * groups[t].penalty * groups[t].rate;
      }
    }
    st.delivered += delivered;
    st.delivered_sq += static_cast<double>(delivered) * delivered;
  }
  return st;
}

Estimate shard_mean_estimate(const std::vector<double>& values) {
  Estimate e;
  if (values.empty()) return e;
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / values.size();
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - e.mean) * (v - e.mean);
    e.stderr_ = std::sqrt(ss / (values.size() - 1) / values.size());
  }
  return e;
}

}  // namespace

SimReport run(const SimConfig& cfg, ExecMode mode) {
  if (cfg.slots < 1) throw std::invalid_argument("SimConfig: slots < 1");
  std::vector<Group> groups = flatten(cfg);

  int shards = cfg.slots >= 2 * kShards ? kShards : 1;
  std::vector<ShardStats> parts(shards);
  long base = cfg.slots / shards;
  long extra = cfg.slots % shards;

  bool parallel = mode == ExecMode::kParallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (int s = 0; s < shards; ++s) {
    long shard_slots = base + (s < extra ? 1 : 0);
    parts[s] = run_shard(groups, cfg, shard_slots, Rng::Split(cfg.seed, s));
  }

  SimReport report;
  report.slots = cfg.slots;
  report.seed = cfg.seed;
  report.per_type.resize(groups.size());

  std::vector<double> shard_throughput, shard_psut, shard_pu_rate;
  std::vector<std::vector<double>> shard_utility(groups.size());
  std::vector<std::vector<double>> shard_pnc(groups.size());
  std::vector<std::vector<double>> shard_pc(groups.size());

  double delivered = 0.0;
  for (const ShardStats& st : parts) {
    delivered += st.delivered;
    report.slots_with_tx += st.slots_with_tx;
    report.slots_on += st.on_slots;
    report.off_on_transitions += st.transitions;
    shard_throughput.push_back(st.delivered / st.slots);
    shard_psut.push_back(static_cast<double>(st.slots_with_tx) / st.slots);
    if (st.on_slots > 0) {
      shard_pu_rate.push_back(static_cast<double>(st.collisions) / st.on_slots);
    }
    for (size_t t = 0; t < groups.size(); ++t) {
      TypeReport& tr = report.per_type[t];
      tr.attempts += st.types[t].attempts;
      tr.successes += st.types[t].successes;
      tr.player_slots += st.types[t].player_slots;
      if (st.types[t].attempts > 0) {
        shard_utility[t].push_back(st.types[t].payoff / st.types[t].attempts);
      }
      if (st.types[t].player_slots > 0.0) {
        shard_pnc[t].push_back(st.types[t].successes /
                               st.types[t].player_slots);
        shard_pc[t].push_back(
            (st.types[t].attempts - st.types[t].successes) /
            st.types[t].player_slots);
      }
    }
  }

  report.throughput = shard_mean_estimate(shard_throughput);
  report.throughput.mean = delivered / cfg.slots;  // exact pooled mean
  report.p_any_tx = shard_mean_estimate(shard_psut);
  report.p_any_tx.mean = static_cast<double>(report.slots_with_tx) / cfg.slots;
  report.pu_collision_rate = shard_mean_estimate(shard_pu_rate);
  if (report.slots_on > 0) {
    long collisions = 0;
    for (const ShardStats& st : parts) collisions += st.collisions;
    report.pu_collision_rate.mean =
        static_cast<double>(collisions) / report.slots_on;
  }

  for (size_t t = 0; t < groups.size(); ++t) {
    TypeReport& tr = report.per_type[t];
    tr.utility = shard_mean_estimate(shard_utility[t]);
    if (tr.attempts > 0) {
      double payoff = 0.0;
      for (const ShardStats& st : parts) payoff += st.types[t].payoff;
      tr.utility.mean = payoff / tr.attempts;
    }
    tr.p_nc_est = shard_mean_estimate(shard_pnc[t]);
    tr.p_c_est = shard_mean_estimate(shard_pc[t]);
    if (tr.player_slots > 0.0) {
      tr.p_nc = tr.successes / tr.player_slots;
      tr.p_c = (tr.attempts - tr.successes) / tr.player_slots;
      tr.p_tx = tr.attempts / tr.player_slots;
      tr.p_nc_est.mean = tr.p_nc;  // pooled means, shard-based spread
      tr.p_c_est.mean = tr.p_c;
    }
  }
  return report;
}

Estimate mc_probability(McEvent event, const SimConfig& config, long trials) {
  if (trials < 10000) {
    throw std::invalid_argument("mc_probability: need >= 1e4 trials");
  }
  SimConfig cfg = config;
  cfg.slots = trials;
  SimReport rep = run(cfg);
  switch (event) {
    case McEvent::kPnc:
      return rep.per_type[0].p_nc_est;
    case McEvent::kPc:
      return rep.per_type[0].p_c_est;
    case McEvent::kPsut:
      return rep.p_any_tx;
  }
  throw std::invalid_argument("mc_probability: unknown event");
}

Estimate mc_poisson_game_throughput(double lambda, int k_max, long slots,
                                    uint64_t seed, ExecMode mode) {
  if (!(lambda > 0.0) || slots < 1) {
    throw std::invalid_argument("mc_poisson_game_throughput: bad arguments");
  }
  double p = p_opt_poisson(lambda, k_max);

  int shards = slots >= 2 * kShards ? kShards : 1;
  long base = slots / shards;
  long extra = slots % shards;
  std::vector<double> sums(shards, 0.0);

  bool parallel = mode == ExecMode::kParallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (int s = 0; s < shards; ++s) {
    Rng rng(Rng::Split(seed, s));
    long n_slots = base + (s < extra ? 1 : 0);
    double acc = 0.0;
    for (long i = 0; i < n_slots; ++i) {
      int population = rng.Poisson(lambda);
      // Populations that always fit transmit outright (their optimal
      // strategy is p = 1); larger ones thin themselves with p.
      int tx = population <= k_max ? population : rng.Binomial(population, p);
      if (tx >= 1 && tx <= k_max + 1) acc += tx;
    }
    sums[s] = acc;
  }

  std::vector<double> shard_means;
  double total = 0.0;
  for (int s = 0; s < shards; ++s) {
    long n_slots = base + (s < extra ? 1 : 0);
    shard_means.push_back(sums[s] / n_slots);
    total += sums[s];
  }
  Estimate e = shard_mean_estimate(shard_means);
  e.mean = total / slots;
  return e;
}

ConvergenceTrace best_response_dynamics(const GameSpec& game,
                                        const MixedStrategy& p0, double step,
                                        int iterations, const Tolerance& tol) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw std::invalid_argument("best_response_dynamics: step in (0,1]");
  }
  if (p0.p.size() != game.num_types()) {
    throw std::invalid_argument("best_response_dynamics: p0 size mismatch");
  }
  ConvergenceTrace trace;
  MixedStrategy sigma = p0;
  for (int it = 0; it <= iterations; ++it) {
    TraceStep ts;
    ts.iteration = it;
    double worst = 0.0;
    for (size_t t = 0; t < game.num_types(); ++t) {
      double u = expected_utility(game, t, Action::kOn, sigma);
      ts.p.push_back(sigma.p[t]);
      ts.u_on.push_back(u);
      worst = std::max(worst, std::fabs(u) / game.types()[t].rate);
    }
    trace.steps.push_back(std::move(ts));
    if (worst <= tol.abs_tol) {
      trace.converged = true;
      break;
    }
    if (it == iterations) break;
    for (size_t t = 0; t < game.num_types(); ++t) {
      double u = trace.steps.back().u_on[t] / game.types()[t].rate;
      double next = std::clamp(sigma.p[t] + step * u, 0.0, 1.0);
      sigma.p[t] = Prob(next);
    }
  }
  return trace;
}

}  // namespace crgames
