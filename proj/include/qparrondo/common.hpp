// Copyright 2026 The qparrondo Authors
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

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qparrondo {

/// Tolerance for structural checks: unitarity, normalization, support.
inline constexpr double kStructuralTol = 1e-12;
/// Tolerance for end-to-end payoff comparisons.
inline constexpr double kEndToEndTol = 1e-9;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Malformed or out-of-contract input (bad sequence, index, label).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input that is well-formed but fails a numeric validation
/// (norm check, bias range, unitarity).
class NumericValidationError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Reduces an angle into [0, 2π).
inline double wrap_phase(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2π
    return r >= kTwoPi ? 0.0 : r;
}

} // namespace qparrondo
