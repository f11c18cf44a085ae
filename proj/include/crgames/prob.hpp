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

#ifndef CRGAMES_PROB_HPP_
#define CRGAMES_PROB_HPP_

#include <cmath>
#include <stdexcept>
#include <string>

namespace crgames {

// A probability value, guaranteed to lie in [0, 1].
//
// Construction from a value outside the unit interval throws; values that
// miss the interval by floating-point noise can be repaired with Clamped().
// Converts implicitly to double so it composes with ordinary arithmetic.
class Prob {
 public:
  constexpr Prob() : value_(0.0) {}

  explicit Prob(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::domain_error("Prob out of [0,1]: " + std::to_string(value));
    }
  }

  // Accepts values within `slack` of [0,1] and clamps them; anything
  // further out is a genuine bug and still throws.
  static Prob Clamped(double value, double slack = 1e-9) {
    if (value < 0.0 && value >= -slack) value = 0.0;
    if (value > 1.0 && value <= 1.0 + slack) value = 1.0;
    return Prob(value);
  }

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }

 private:
  double value_;
};

// Convergence control for iterative numeric routines.
struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  int max_iter = 200;

  Tolerance() = default;
  Tolerance(double abs, double rel, int iters)
      : abs_tol(abs), rel_tol(rel), max_iter(iters) {
    if (!(abs_tol > 0.0)) throw std::domain_error("Tolerance: abs_tol <= 0");
    if (rel_tol < 0.0) throw std::domain_error("Tolerance: rel_tol < 0");
    if (max_iter < 1) throw std::domain_error("Tolerance: max_iter < 1");
  }
};

}  // namespace crgames

#endif  // CRGAMES_PROB_HPP_
