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

// Benchmark comparing the serial reference kernels against their OpenMP
// counterparts. Both paths must produce identical results; the timings
// show what the parallel path buys on the current machine.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crgames/sim.hpp"
#include "crgames/single_type.hpp"
#include "crgames/two_type.hpp"

using namespace crgames;

namespace {

double seconds(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n",
              name, serial, parallel, serial / parallel,
              equal ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both paths run serially\n");
#endif

  {
    TwoTypeConfig cfg{FixedTwoType{15, 10}, 1.0, 1.0, 5, 3};
    std::vector<ParetoPoint> a, b;
    double ts = seconds([&] { a = pareto_search(cfg, 512, ExecMode::kSerial); });
    double tp = seconds([&] { b = pareto_search(cfg, 512, ExecMode::kParallel); });
    bool equal = a.size() == b.size();
    for (size_t i = 0; equal && i < a.size(); ++i) {
      equal = a[i].u1 == b[i].u1 && a[i].u2 == b[i].u2;
    }
    report("pareto_search 512x512", ts, tp, equal);
  }

  {
    SimConfig cfg{GameSpec(FixedPopulation{20},
                           {TypeSpec{1.0, 1.0, 3, alpha_star_fixedN(20, 3)}}),
                  MixedStrategy::Uniform(p_opt_fixedN(20, 3)),
                  std::nullopt,
                  4000000,
                  1234,
                  PopulationRedraw::kPerSlot};
    SimReport a, b;
    double ts = seconds([&] { a = run(cfg, ExecMode::kSerial); });
    double tp = seconds([&] { b = run(cfg, ExecMode::kParallel); });
    bool equal = a.throughput.mean == b.throughput.mean &&
                 a.per_type[0].attempts == b.per_type[0].attempts;
    report("sim 4e6 slots, N=20", ts, tp, equal);
  }

  {
    Estimate a, b;
    double ts = seconds(
        [&] { a = mc_poisson_game_throughput(30.0, 5, 2000000, 9, ExecMode::kSerial); });
    double tp = seconds(
        [&] { b = mc_poisson_game_throughput(30.0, 5, 2000000, 9, ExecMode::kParallel); });
    report("poisson game 2e6 slots", ts, tp,
           a.mean == b.mean && a.stderr_ == b.stderr_);
  }
  return 0;
}
