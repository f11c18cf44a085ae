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

// Command-line front end: solvers, frontier construction, throughput
// sweeps, convergence traces and the Monte-Carlo simulator, all emitting
// machine-readable CSV/JSON plus a reproducibility manifest.
//
// Exit codes: 0 success, 2 usage or config error, 3 infeasible problem,
// 4 non-convergence.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crgames/errors.hpp"
#include "crgames/game.hpp"
#include "crgames/pu_activity.hpp"
#include "crgames/sim.hpp"
#include "crgames/single_type.hpp"
#include "crgames/specfun.hpp"
#include "crgames/throughput.hpp"
#include "crgames/two_type.hpp"
#include "json.hpp"
#include "output.hpp"

namespace {

using namespace crgames;
using crgames::tools::CsvWriter;
using crgames::tools::num;
using crgames::tools::write_manifest;
using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNoConvergence = 4;

std::vector<std::string> g_argv;

// --out paths are taken relative to CRGAMES_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  const char* base = std::getenv("CRGAMES_OUT_DIR");
  if (base == nullptr || path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base) / p).string();
}

struct PopulationArg {
  bool fixed = false;
  int n = 0;
  double lambda = 0.0;
};

PopulationArg parse_population(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("--population",
                               "expected fixed:<N> or poisson:<lambda>");
  }
  std::string kind = text.substr(0, colon);
  std::string value = text.substr(colon + 1);
  PopulationArg arg;
  try {
    if (kind == "fixed") {
      arg.fixed = true;
      arg.n = std::stoi(value);
    } else if (kind == "poisson") {
      arg.lambda = std::stod(value);
    } else {
      throw std::invalid_argument(kind);
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--population",
                               "expected fixed:<N> or poisson:<lambda>");
  }
  return arg;
}

// Sweeps accept "2:8" (inclusive range), "2:8:2" (with stride) or a comma
// list "2,4,6".
std::vector<double> parse_sweep(const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    double lo, hi, step = 1.0;
    auto first = text.find(':');
    auto second = text.find(':', first + 1);
    lo = std::stod(text.substr(0, first));
    if (second == std::string::npos) {
      hi = std::stod(text.substr(first + 1));
    } else {
      hi = std::stod(text.substr(first + 1, second - first - 1));
      step = std::stod(text.substr(second + 1));
    }
    if (step <= 0.0) throw std::invalid_argument("sweep stride must be > 0");
    for (double v = lo; v <= hi + 1e-9; v += step) values.push_back(v);
  } else {
    std::string rest = text;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      values.push_back(std::stod(rest.substr(0, comma)));
      if (comma == std::string::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return values;
}

// ---------------------------------------------------------------- utility

int cmd_utility_curve(double lambda, int kmax, std::optional<int> kmax2,
                      double r1, double alpha, std::optional<double> beta,
                      int grid, const std::string& out_path) {
  if (grid < 2) throw CLI::ValidationError("--grid", "need at least 2 points");
  std::string out = resolve_out(out_path);
  std::string canonical = "utility-curve" + std::to_string(lambda) + "," +
                          std::to_string(kmax) + "," + std::to_string(alpha) +
                          "," + std::to_string(grid);

  if (!kmax2.has_value()) {
    GameSpec game(PoissonPopulation{lambda}, {TypeSpec{1.0, 1.0, kmax, alpha}});
    for (const auto& w : game.warnings()) std::cerr << "warning: " << w << '\n';
    CsvWriter csv(out, {"p", "U"});
    for (int i = 0; i < grid; ++i) {
      double p = static_cast<double>(i) / (grid - 1);
      csv.write_row({p, mixed_utility(game, 0, MixedStrategy::Uniform(p))});
    }
  } else {
    double b = beta.value_or(alpha);
    GameSpec game(PoissonPopulation{lambda},
                  {TypeSpec{r1, 1.0, kmax, alpha},
                   TypeSpec{1.0 - r1, 1.0, *kmax2, b}});
    CsvWriter csv(out, {"p1", "p2", "U1", "U2"});
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        MixedStrategy sigma{{Prob(static_cast<double>(i) / (grid - 1)),
                             Prob(static_cast<double>(j) / (grid - 1))}};
        csv.write_row({sigma.p[0], sigma.p[1], mixed_utility(game, 0, sigma),
                       mixed_utility(game, 1, sigma)});
      }
    }
  }
  write_manifest(out + ".manifest.json", g_argv, canonical, std::nullopt,
                 {out});
  return 0;
}

// ------------------------------------------------------------ equilibrium

int cmd_equilibrium(const std::string& population, int kmax,
                    std::optional<double> alpha, const std::string& out_path) {
  PopulationArg pop = parse_population(population);
  std::string out = resolve_out(out_path);

  ordered_json report;
  report["population"] = pop.fixed ? "fixed" : "poisson";
  report[pop.fixed ? "n" : "lambda"] = pop.fixed ? pop.n : pop.lambda;
  report["k_max"] = kmax;

  if (pop.fixed) {
    if (!alpha.has_value()) {
      report["p_opt"] = p_opt_fixedN(pop.n, kmax).value();
      report["alpha_star"] = alpha_star_fixedN(pop.n, kmax);
      report["alpha_star_inclusive"] = alpha_star_fixedN_inclusive(pop.n, kmax);
    }
  } else {
    if (!alpha.has_value()) {
      report["p_opt"] = p_opt_poisson(pop.lambda, kmax).value();
      report["p_opt_mixture"] = p_opt_poisson_full(pop.lambda, kmax).value();
      report["alpha_star"] = alpha_star_poisson(pop.lambda, kmax);
      report["alpha_star_inclusive"] =
          alpha_star_poisson_inclusive(pop.lambda, kmax);
    }
  }
  auto pmf = pop.fixed ? PopulationPmf::Degenerate(pop.n)
                       : PopulationPmf::Poisson(pop.lambda);
  SolveOptions options;
  options.k_max = kmax;
  options.alpha = alpha.value_or(-1.0);
  options.tol = Tolerance(1e-12, 0.0, 300);
  EquilibriumResult eq = solve_single_type(pmf, options);
  report["alpha"] = eq.alpha;
  report["p_eq"] = eq.p_eq.value();
  report["residual"] = eq.residual;

  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot open output file: " + out);
  file << report.dump(2) << '\n';
  write_manifest(out + ".manifest.json", g_argv, report.dump(), std::nullopt,
                 {out});
  return 0;
}

// --------------------------------------------------------------- frontier

int cmd_frontier(const std::string& mode, std::optional<int> n1,
                 std::optional<int> n2, std::optional<double> lambda,
                 double r1, int k1, int k2, double rate1, double rate2,
                 std::optional<double> budget, int search_grid,
                 std::optional<uint64_t> seed, const std::string& out_path) {
  TwoTypeConfig cfg;
  if (lambda.has_value()) {
    cfg.population = PoissonTwoType{*lambda, r1};
  } else if (n1.has_value() && n2.has_value()) {
    cfg.population = FixedTwoType{*n1, *n2};
  } else {
    throw CLI::ValidationError(
        "--n1/--n2/--lambda", "give either --n1 and --n2 or --lambda");
  }
  cfg.rate1 = rate1;
  cfg.rate2 = rate2;
  cfg.k1 = k1;
  cfg.k2 = k2;
  cfg.validate();

  bool want_pareto = mode == "pareto" || mode == "both";
  bool want_restriction = mode == "restriction" || mode == "both";
  if (!want_pareto && !want_restriction) {
    throw CLI::ValidationError("--mode", "expected pareto|restriction|both");
  }
  if (want_restriction && !budget.has_value()) {
    throw CLI::ValidationError("--budget",
                               "restriction frontier needs --budget");
  }

  std::string out = resolve_out(out_path);
  CsvWriter csv(out, {"kind", "p1", "p2", "u1", "u2"});
  ordered_json summary;

  auto emit_curve = [&](const char* kind, const FrontierSegment& f) {
    const int samples = 129;
    for (int i = 0; i < samples; ++i) {
      double p1 = f.right.p1 * i / (samples - 1);
      double p2 = f.p2_at(p1);
      auto [u1, u2] = cfg.is_poisson()
                          ? pnc_two_types_poisson(Prob(p1), Prob(p2), cfg)
                          : pnc_two_types_fixed(Prob(p1), Prob(p2), cfg);
      csv.write_row({p1, p2, rate1 * u1, rate2 * u2}, {kind});
    }
  };

  std::optional<FrontierSegment> pareto;
  if (want_pareto) {
    pareto = pareto_frontier(cfg);
    emit_curve("pareto_analytic", *pareto);
    summary["pareto"] = {{"left_p2", pareto->left.p2},
                         {"knee_p1", pareto->knee.p1},
                         {"right_p1", pareto->right.p1},
                         {"m1", pareto->m1},
                         {"m2", pareto->m2}};
    auto [alpha, beta] =
        penalties_two_types(Prob(pareto->knee.p1), Prob(pareto->knee.p2), cfg);
    summary["penalties_at_knee"] = {{"alpha", alpha}, {"beta", beta}};
    if (search_grid > 0) {
      for (const ParetoPoint& pt : pareto_search(cfg, search_grid)) {
        csv.write_row({pt.p1, pt.p2, pt.u1, pt.u2}, {"pareto_search"});
      }
    }
  }

  std::optional<FrontierSegment> restriction;
  if (want_restriction) {
    restriction = restriction_frontier(cfg, CollisionBudget::FromBudget(*budget))
                      .value_or(FrontierSegment{});
    if (restriction->right.p1 == 0.0) {
      summary["restriction"] = "unconstrained";
      restriction.reset();
    } else {
      emit_curve("restriction", *restriction);
      summary["restriction"] = {{"p1_star", restriction->right.p1},
                                {"p2_star", restriction->left.p2}};
    }
  }

  if (mode == "both") {
    auto region = admissible_region(cfg, CollisionBudget::FromBudget(*budget),
                                    *pareto);
    const char* regime = region.regime == Regime::kRestrictionBinding
                             ? "restriction-binding"
                             : region.regime == Regime::kParetoBinding
                                   ? "pareto-binding"
                                   : "mixed";
    summary["regime"] = regime;
    for (const Point2& pt : region.operating_curve) {
      csv.write_row({pt.p1, pt.p2, 0.0, 0.0}, {"operating"});
    }
    std::cout << "regime: " << regime << '\n';
  }

  std::string summary_path = out + ".summary.json";
  {
    std::ofstream file(summary_path);
    file << summary.dump(2) << '\n';
  }
  write_manifest(out + ".manifest.json", g_argv, summary.dump(), seed,
                 {out, summary_path});
  return 0;
}

// ------------------------------------------------------------- throughput

int cmd_throughput(const std::string& scheme, const std::string& sweep_text,
                   int kmax, int w0, int max_stage, long slots, uint64_t seed,
                   const std::string& out_path) {
  std::vector<double> sweep = parse_sweep(sweep_text);
  if (sweep.empty()) {
    throw CLI::ValidationError("--n/--lambda", "empty sweep");
  }
  std::string out = resolve_out(out_path);
  CsvWriter csv(out, {"n_or_lambda", "scheme", "throughput", "stderr"});

  for (double x : sweep) {
    if (scheme == "game-fixed") {
      int n = static_cast<int>(x);
      auto r = throughput_fixedN(n, kmax, p_opt_fixedN(n, kmax));
      csv.write_row({x, r.value, 0.0}, {"game-fixed"});
    } else if (scheme == "game-poisson") {
      auto r = throughput_poisson(x, kmax);
      csv.write_row({x, r.value, 0.0}, {"game-poisson"});
    } else if (scheme == "backoff") {
      BackoffConfig cfg;
      cfg.n = static_cast<int>(x);
      cfg.w0 = w0;
      cfg.max_stage = max_stage;
      cfg.k_max = kmax;
      cfg.slots = slots;
      cfg.seed = seed;
      if (slots < 10000) {
        std::cerr << "warning: fewer than 1e4 slots, low-confidence backoff "
                     "estimate\n";
      }
      auto r = backoff_throughput(cfg);
      csv.write_row({x, r.value, r.stderr_}, {"backoff"});
    } else {
      throw CLI::ValidationError("--scheme",
                                 "expected game-fixed|game-poisson|backoff");
    }
  }
  write_manifest(out + ".manifest.json", g_argv,
                 scheme + sweep_text + std::to_string(kmax), seed, {out});
  return 0;
}

// --------------------------------------------------------------- converge

int cmd_converge(int n, int kmax, std::optional<double> alpha, double p0,
                 double step, int iters, double tol,
                 const std::string& out_path) {
  if (step <= 0.0 || step > 1.0) {
    throw CLI::ValidationError("--step", "step must lie in (0, 1]");
  }
  double a = alpha.has_value() ? *alpha : alpha_star_fixedN(n, kmax);
  GameSpec game(FixedPopulation{n}, {TypeSpec{1.0, 1.0, kmax, a}});
  auto trace = best_response_dynamics(game, MixedStrategy::Uniform(p0), step,
                                      iters, Tolerance(tol, 0.0, iters + 1));

  std::string out = resolve_out(out_path);
  CsvWriter csv(out, {"step", "p", "u_on"});
  for (const TraceStep& ts : trace.steps) {
    csv.write_row({static_cast<double>(ts.iteration), ts.p[0], ts.u_on[0]});
  }
  write_manifest(out + ".manifest.json", g_argv,
                 std::to_string(n) + "," + std::to_string(kmax) + "," +
                     std::to_string(p0),
                 std::nullopt, {out});
  if (!trace.converged) {
    std::cerr << "did not converge within " << iters << " iterations\n";
    return kExitNoConvergence;
  }
  std::cout << "converged to p = " << num(trace.steps.back().p[0]) << " after "
            << trace.steps.back().iteration << " iterations\n";
  return 0;
}

// --------------------------------------------------------------- simulate

SimConfig parse_sim_config(const nlohmann::json& j) {
  if (!j.contains("population") || !j.contains("types")) {
    throw std::invalid_argument("config needs 'population' and 'types'");
  }
  const auto& pop = j.at("population");
  std::string model = pop.at("model").get<std::string>();
  const auto& types = j.at("types");
  if (!types.is_array() || types.empty() || types.size() > 2) {
    throw std::invalid_argument("'types' must hold one or two entries");
  }

  std::vector<Prob> strategy;
  for (const auto& t : types) {
    strategy.emplace_back(t.at("p").get<double>());
  }

  SimConfig cfg{GameSpec(FixedPopulation{2}, {TypeSpec{}}),
                MixedStrategy{strategy},
                std::nullopt,
                j.value("slots", 100000L),
                j.value("seed", 1ULL),
                PopulationRedraw::kPerSlot};

  auto type_at = [&](size_t i) {
    const auto& t = types.at(i);
    TypeSpec spec;
    spec.r = t.value("r", 1.0);
    spec.rate = t.value("rate", 1.0);
    spec.k_max = t.value("k_max", 0);
    spec.penalty = t.value("penalty", 0.0);
    return spec;
  };

  if (model == "poisson") {
    double lambda = pop.at("lambda").get<double>();
    if (pop.value("redraw", "per-slot") == std::string("fixed-episode")) {
      cfg.redraw = PopulationRedraw::kFixedEpisode;
    }
    std::vector<TypeSpec> specs;
    for (size_t i = 0; i < types.size(); ++i) specs.push_back(type_at(i));
    cfg.game = GameSpec(PoissonPopulation{lambda}, specs);
  } else if (model == "fixed") {
    if (types.size() == 1) {
      TypeSpec spec = type_at(0);
      spec.r = 1.0;
      cfg.game = GameSpec(FixedPopulation{types.at(0).at("n").get<int>()},
                          {spec});
    } else {
      TwoTypeConfig two;
      two.population = FixedTwoType{types.at(0).at("n").get<int>(),
                                    types.at(1).at("n").get<int>()};
      two.rate1 = type_at(0).rate;
      two.rate2 = type_at(1).rate;
      two.k1 = type_at(0).k_max;
      two.k2 = type_at(1).k_max;
      cfg.game = two;
      cfg.two_type_penalties = {type_at(0).penalty, type_at(1).penalty};
    }
  } else {
    throw std::invalid_argument("population.model must be fixed|poisson");
  }

  if (j.contains("pu")) {
    const auto& pu = j.at("pu");
    cfg.pu = ge_derive(Prob(pu.at("p_t").get<double>()),
                       Prob(pu.at("rho").get<double>()));
  }
  return cfg;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 std::optional<uint64_t> seed_override,
                 std::optional<long> slots_override) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config file: " << config_path << '\n';
    return kExitUsage;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "config parse error: " << e.what() << '\n';
    return kExitUsage;
  }

  SimConfig cfg = parse_sim_config(j);
  if (seed_override.has_value()) cfg.seed = *seed_override;
  if (slots_override.has_value()) cfg.slots = *slots_override;

  SimReport rep = run(cfg);

  ordered_json report;
  report["slots"] = rep.slots;
  report["seed"] = rep.seed;
  report["throughput"] = {{"mean", rep.throughput.mean},
                          {"stderr", rep.throughput.stderr_}};
  report["types"] = nlohmann::json::array();
  for (const TypeReport& t : rep.per_type) {
    report["types"].push_back({{"utility_mean", t.utility.mean},
                               {"utility_stderr", t.utility.stderr_},
                               {"p_nc", t.p_nc},
                               {"p_c", t.p_c},
                               {"p_tx", t.p_tx},
                               {"attempts", t.attempts},
                               {"successes", t.successes}});
  }
  if (rep.slots_on > 0) {
    report["pu"] = {{"collision_rate", rep.pu_collision_rate.mean},
                    {"collision_rate_stderr", rep.pu_collision_rate.stderr_},
                    {"slots_on", rep.slots_on},
                    {"off_on_transitions", rep.off_on_transitions}};
  }

  std::string dir = resolve_out(out_dir);
  std::filesystem::create_directories(dir);
  std::string report_path = (std::filesystem::path(dir) / "report.json").string();
  {
    std::ofstream file(report_path);
    if (!file) throw std::runtime_error("cannot open " + report_path);
    file << report.dump(2) << '\n';
  }
  write_manifest((std::filesystem::path(dir) / "manifest.json").string(),
                 g_argv, j.dump(), cfg.seed, {report_path});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_argv.assign(argv, argv + argc);

  CLI::App app{"Penalized random-access games for cognitive radio: solvers, "
               "frontiers and Monte-Carlo simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", crgames::tools::kToolVersion);

  // utility-curve
  auto* uc = app.add_subcommand("utility-curve",
                                "Expected mixed utility over a strategy grid");
  double uc_lambda = 15.0, uc_r1 = 0.5, uc_alpha = 0.0;
  int uc_kmax = 5, uc_grid = 101;
  std::optional<int> uc_kmax2;
  std::optional<double> uc_beta;
  std::string uc_out = "utility.csv";
  uc->add_option("--lambda", uc_lambda, "mean number of players");
  uc->add_option("--kmax", uc_kmax, "MPR tolerance (type 1)");
  uc->add_option("--kmax2", uc_kmax2, "MPR tolerance of type 2 (enables two types)");
  uc->add_option("--r1", uc_r1, "type-1 share for two-type curves");
  uc->add_option("--alpha", uc_alpha, "collision penalty (type 1)");
  uc->add_option("--beta", uc_beta, "collision penalty of type 2");
  uc->add_option("--grid", uc_grid, "points per axis");
  uc->add_option("--out", uc_out, "output CSV path");

  // equilibrium
  auto* eq = app.add_subcommand("equilibrium",
                                "Optimal strategy, penalty and equilibrium");
  std::string eq_pop = "fixed:20", eq_out = "equilibrium.json";
  int eq_kmax = 3;
  std::optional<double> eq_alpha;
  eq->add_option("--population", eq_pop, "fixed:<N> or poisson:<lambda>");
  eq->add_option("--kmax", eq_kmax, "MPR tolerance");
  eq->add_option("--alpha", eq_alpha, "solve p_eq for this penalty only");
  eq->add_option("--out", eq_out, "output JSON path");

  // frontier
  auto* fr = app.add_subcommand("frontier",
                                "Pareto / restriction frontiers for two types");
  std::string fr_mode = "pareto", fr_out = "frontier.csv";
  std::optional<int> fr_n1, fr_n2;
  std::optional<double> fr_lambda, fr_budget;
  double fr_r1 = 0.5, fr_rate1 = 1.0, fr_rate2 = 1.0;
  int fr_k1 = 1, fr_k2 = 1, fr_grid = 0;
  std::optional<uint64_t> fr_seed;
  fr->add_option("--mode", fr_mode, "pareto|restriction|both");
  fr->add_option("--n1", fr_n1, "type-1 population (fixed)");
  fr->add_option("--n2", fr_n2, "type-2 population (fixed)");
  fr->add_option("--lambda", fr_lambda, "total mean population (Poisson)");
  fr->add_option("--r1", fr_r1, "type-1 share (Poisson)");
  fr->add_option("--k1", fr_k1, "type-1 MPR tolerance");
  fr->add_option("--k2", fr_k2, "type-2 MPR tolerance");
  fr->add_option("--rate1", fr_rate1, "type-1 rate payoff");
  fr->add_option("--rate2", fr_rate2, "type-2 rate payoff");
  fr->add_option("--budget", fr_budget,
                 "collision budget N_on_bar * P_col_th for the restriction");
  fr->add_option("--search-grid", fr_grid,
                 "lattice size for the grid Pareto search (0 = skip)");
  fr->add_option("--seed", fr_seed, "recorded in the manifest");
  fr->add_option("--out", fr_out, "output CSV path");

  // throughput
  auto* tp = app.add_subcommand("throughput", "Throughput sweeps per scheme");
  std::string tp_scheme = "game-fixed", tp_sweep, tp_out = "throughput.csv";
  int tp_kmax = 3, tp_w0 = 16, tp_stage = 6;
  long tp_slots = 200000;
  uint64_t tp_seed = 1;
  tp->add_option("--scheme", tp_scheme, "game-fixed|game-poisson|backoff");
  tp->add_option("--n", tp_sweep, "population sweep, e.g. 2:8 or 5,10,20");
  tp->add_option("--lambda", tp_sweep, "mean-population sweep (alias of --n)");
  tp->add_option("--kmax", tp_kmax, "MPR tolerance");
  tp->add_option("--w0", tp_w0, "initial contention window (backoff)");
  tp->add_option("--max-stage", tp_stage, "backoff stage cap");
  tp->add_option("--slots", tp_slots, "simulated slots (backoff)");
  tp->add_option("--seed", tp_seed, "simulation seed (backoff)");
  tp->add_option("--out", tp_out, "output CSV path");

  // converge
  auto* cv = app.add_subcommand("converge",
                                "Best-response dynamics trace to equilibrium");
  int cv_n = 20, cv_kmax = 3, cv_iters = 500;
  double cv_p0 = 0.9, cv_step = 0.1, cv_tol = 1e-9;
  std::optional<double> cv_alpha;
  std::string cv_out = "converge.csv";
  cv->add_option("--n", cv_n, "population size");
  cv->add_option("--kmax", cv_kmax, "MPR tolerance");
  cv->add_option("--alpha", cv_alpha, "penalty (defaults to alpha_star)");
  cv->add_option("--p0", cv_p0, "starting transmit probability");
  cv->add_option("--step", cv_step, "damping step in (0,1]");
  cv->add_option("--iters", cv_iters, "iteration cap");
  cv->add_option("--tol", cv_tol, "|U_ON|/R stopping tolerance");
  cv->add_option("--out", cv_out, "output CSV path");

  // simulate
  auto* sm = app.add_subcommand("simulate",
                                "Run the Monte-Carlo engine from a config file");
  std::string sm_config, sm_out = "simout";
  std::optional<uint64_t> sm_seed;
  std::optional<long> sm_slots;
  sm->add_option("--config", sm_config, "JSON config file")->required();
  sm->add_option("--out", sm_out, "output directory");
  sm->add_option("--seed", sm_seed, "override the config seed");
  sm->add_option("--slots", sm_slots, "override the config slot count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (uc->parsed()) {
      return cmd_utility_curve(uc_lambda, uc_kmax, uc_kmax2, uc_r1, uc_alpha,
                               uc_beta, uc_grid, uc_out);
    }
    if (eq->parsed()) return cmd_equilibrium(eq_pop, eq_kmax, eq_alpha, eq_out);
    if (fr->parsed()) {
      return cmd_frontier(fr_mode, fr_n1, fr_n2, fr_lambda, fr_r1, fr_k1,
                          fr_k2, fr_rate1, fr_rate2, fr_budget, fr_grid,
                          fr_seed, fr_out);
    }
    if (tp->parsed()) {
      return cmd_throughput(tp_scheme, tp_sweep, tp_kmax, tp_w0, tp_stage,
                            tp_slots, tp_seed, tp_out);
    }
    if (cv->parsed()) {
      return cmd_converge(cv_n, cv_kmax, cv_alpha, cv_p0, cv_step, cv_iters,
                          cv_tol, cv_out);
    }
    if (sm->parsed()) return cmd_simulate(sm_config, sm_out, sm_seed, sm_slots);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const crgames::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
