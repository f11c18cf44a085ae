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

#include "crgames/population.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "crgames/specfun.hpp"

namespace crgames {

PopulationPmf PopulationPmf::Poisson(double lambda) {
  if (!(lambda > 0.0)) {
    throw std::domain_error("PopulationPmf::Poisson: lambda must be > 0");
  }
  PopulationPmf p;
  p.kind_ = Kind::kPoisson;
  p.lambda_ = lambda;
  return p;
}

PopulationPmf PopulationPmf::Degenerate(int n0) {
  if (n0 < 1) throw std::domain_error("PopulationPmf::Degenerate: n0 < 1");
  PopulationPmf p;
  p.kind_ = Kind::kDegenerate;
  p.n0_ = n0;
  return p;
}

PopulationPmf PopulationPmf::FromTable(std::vector<double> table) {
  if (table.empty()) {
    throw std::domain_error("PopulationPmf::FromTable: empty table");
  }
  double total = std::accumulate(table.begin(), table.end(), 0.0);
  if (std::fabs(total - 1.0) > 1e-9) {
    throw std::domain_error("PopulationPmf::FromTable: mass != 1");
  }
  for (double v : table) {
    if (v < 0.0) throw std::domain_error("PopulationPmf::FromTable: pmf < 0");
  }
  PopulationPmf p;
  p.kind_ = Kind::kTable;
  p.table_ = std::move(table);
  return p;
}

double PopulationPmf::pmf(int n) const {
  if (n < 0) return 0.0;
  switch (kind_) {
    case Kind::kPoisson:
      return specfun::poisson_pmf(n, lambda_);
    case Kind::kDegenerate:
      return n == n0_ ? 1.0 : 0.0;
    case Kind::kTable:
      return n < static_cast<int>(table_.size()) ? table_[n] : 0.0;
  }
  return 0.0;
}

double PopulationPmf::zero_mass() const { return pmf(0); }

double PopulationPmf::mean() const {
  switch (kind_) {
    case Kind::kPoisson:
      return lambda_;
    case Kind::kDegenerate:
      return n0_;
    case Kind::kTable: {
      double m = 0.0;
      for (size_t n = 0; n < table_.size(); ++n) m += n * table_[n];
      return m;
    }
  }
  return 0.0;
}

int PopulationPmf::horizon() const {
  switch (kind_) {
    case Kind::kPoisson:
      return specfun::poisson_horizon(lambda_);
    case Kind::kDegenerate:
      return n0_;
    case Kind::kTable:
      return static_cast<int>(table_.size()) - 1;
  }
  return 0;
}

}  // namespace crgames
