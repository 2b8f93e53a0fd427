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

#include <array>
#include <cmath>

#include "qparrondo/coin_ops.hpp"

// Closed-form total payoffs (over 3 qubits) of a single AAB block. These
// are independent of the simulator and serve as its cross-check.

namespace qparrondo {

/// The phases that enter AAB's payoff. Only delta and the betas matter;
/// gamma and the alphas are carried for completeness.
using AABPhaseConfig = PhaseAssignment;

enum class Direction { Max, Min };

/// AAB on |000>: identical to the classical expectation.
inline double aab_payoff_zero_state(double theta,
                                    const std::array<double, 4> &phis) {
    const double s2 = std::sin(theta) * std::sin(theta);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double sin2t = std::sin(2.0 * theta);
    return s2 * s2 * (2.0 - std::cos(2.0 * phis[3])) -
           c2 * c2 * (2.0 + std::cos(2.0 * phis[0])) -
           0.25 * sin2t * sin2t * (std::cos(2.0 * phis[1]) + std::cos(2.0 * phis[2]));
}

/// AAB on (|000> + |111>)/√2. Interference enters through cos(2δ + β_i).
inline double aab_payoff_ghz(double theta, const std::array<double, 4> &phis,
                             const AABPhaseConfig &cfg) {
    const double sin2t = std::sin(2.0 * theta);
    auto term = [&](std::size_t i) {
        return std::cos(2.0 * cfg.delta + cfg.b[i].beta) * std::sin(2.0 * phis[i]);
    };
    return 0.5 * std::cos(2.0 * theta) *
               (std::cos(2.0 * phis[3]) - std::cos(2.0 * phis[0])) +
           0.25 * sin2t * sin2t * (term(0) - term(1) - term(2) + term(3));
}

/// Phases attaining the extreme of aab_payoff_ghz for a given delta:
/// max sets β2 = β3 = π − 2δ and β1 = β4 = −2δ; min swaps the pairs.
/// Angles are reduced into [0, 2π); alphas and gamma are zero.
inline AABPhaseConfig aab_extremal_phases(Direction dir, double delta) {
    AABPhaseConfig cfg;
    cfg.delta = wrap_phase(delta);
    const double aligned = wrap_phase(-2.0 * delta);
    const double opposed = wrap_phase(kPi - 2.0 * delta);
    const bool max = dir == Direction::Max;
    cfg.b[0].beta = max ? aligned : opposed;
    cfg.b[1].beta = max ? opposed : aligned;
    cfg.b[2].beta = max ? opposed : aligned;
    cfg.b[3].beta = max ? aligned : opposed;
    return cfg;
}

/// Extreme of aab_payoff_ghz over all phases:
/// ±¼ sin²2θ Σ|sin 2φ_i| + ½ cos 2θ (cos 2φ4 − cos 2φ1).
inline double aab_ghz_extreme(double theta, const std::array<double, 4> &phis,
                              Direction dir) {
    const double sin2t = std::sin(2.0 * theta);
    double amp = 0.0;
    for (double p : phis) {
        amp += std::abs(std::sin(2.0 * p));
    }
    const double sign = dir == Direction::Max ? 1.0 : -1.0;
    return sign * 0.25 * sin2t * sin2t * amp +
           0.5 * std::cos(2.0 * theta) *
               (std::cos(2.0 * phis[3]) - std::cos(2.0 * phis[0]));
}

} // namespace qparrondo
