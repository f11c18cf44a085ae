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

#ifndef CRGAMES_ERRORS_HPP_
#define CRGAMES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace crgames {

// A numerical routine failed to converge or produced a non-finite result.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// No root bracket: f(lo) and f(hi) have the same sign.
class BracketingError : public NumericError {
 public:
  explicit BracketingError(const std::string& what) : NumericError(what) {}
};

// The requested problem has no solution with the given parameters
// (degenerate frontier, infinite penalty, no equilibrium, ...).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace crgames

#endif  // CRGAMES_ERRORS_HPP_
