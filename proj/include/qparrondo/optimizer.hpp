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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "qparrondo/analytic.hpp"
#include "qparrondo/circuit.hpp"
#include "qparrondo/coin_ops.hpp"
#include "qparrondo/payoff.hpp"

// Cyclic coordinate search over the ten phases with amplitude angles held
// fixed. The payoff is 2π-periodic in every phase, so each coordinate is
// scanned on a uniform grid and the best grid point is polished with
// Newton steps on the grid's trigonometric interpolant.

namespace qparrondo {

inline constexpr std::size_t kPhaseGridPoints = 64;
inline constexpr double kSweepImprovementTol = 1e-9;

struct OptimizationBudget {
    std::size_t max_sweeps = 100;
    std::size_t max_evaluations = 1'000'000;
};

struct OptimizationResult {
    double best_value = 0.0;
    PhaseAssignment best_phases;
    std::vector<double> trace; ///< best value after each sweep
    std::size_t evaluations = 0;
    std::size_t sweeps = 0;
    bool converged = false;
    double observed_min = std::numeric_limits<double>::infinity();
    double observed_max = -std::numeric_limits<double>::infinity();

    /// True when no evaluation moved the objective by kEndToEndTol or more.
    bool flat() const { return observed_max - observed_min < kEndToEndTol; }
};

namespace detail {

/// Trigonometric interpolant of N equispaced samples on [0, 2π).
class TrigInterpolant {
  public:
    explicit TrigInterpolant(const std::vector<double> &samples) {
        const std::size_t n = samples.size();
        const std::size_t kmax = n / 2 - 1; // drop the Nyquist term
        cos_.assign(kmax + 1, 0.0);
        sin_.assign(kmax + 1, 0.0);
        for (std::size_t k = 1; k <= kmax; ++k) {
            double a = 0.0;
            double b = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double x = kTwoPi * static_cast<double>(j * k % n) /
                                 static_cast<double>(n);
                a += samples[j] * std::cos(x);
                b += samples[j] * std::sin(x);
            }
            cos_[k] = 2.0 * a / static_cast<double>(n);
            sin_[k] = 2.0 * b / static_cast<double>(n);
        }
    }

    double first_derivative(double x) const {
        double acc = 0.0;
        for (std::size_t k = 1; k < cos_.size(); ++k) {
            const double kd = static_cast<double>(k);
            acc += kd * (-cos_[k] * std::sin(kd * x) + sin_[k] * std::cos(kd * x));
        }
        return acc;
    }

    double second_derivative(double x) const {
        double acc = 0.0;
        for (std::size_t k = 1; k < cos_.size(); ++k) {
            const double kd = static_cast<double>(k);
            acc -= kd * kd * (cos_[k] * std::cos(kd * x) + sin_[k] * std::sin(kd * x));
        }
        return acc;
    }

  private:
    std::vector<double> cos_;
    std::vector<double> sin_;
};

/// Newton ascent (sign = +1) or descent (sign = −1) on the interpolant,
/// confined to one grid step around `x0`.
inline double polish_extremum(const TrigInterpolant &interp, double x0,
                              double sign, double step) {
    double x = x0;
    for (int it = 0; it < 50; ++it) {
        const double d1 = interp.first_derivative(x);
        const double d2 = interp.second_derivative(x);
        if (!(sign * d2 < 0.0)) {
            break;
        }
        const double dx = -d1 / d2;
        x = std::clamp(x + dx, x0 - step, x0 + step);
        if (std::abs(dx) < 1e-15) {
            break;
        }
    }
    return x;
}

} // namespace detail

/// Maximizes (or minimizes) `objective(PhaseAssignment)` from `start`.
template <class Objective>
OptimizationResult coordinate_search(Objective &&objective, Direction dir,
                                     PhaseAssignment start,
                                     OptimizationBudget budget = {}) {
    const double sign = dir == Direction::Max ? 1.0 : -1.0;
    const double step = kTwoPi / static_cast<double>(kPhaseGridPoints);

    OptimizationResult res;
    auto eval = [&](const PhaseAssignment &p) {
        const double v = objective(p);
        ++res.evaluations;
        res.observed_min = std::min(res.observed_min, v);
        res.observed_max = std::max(res.observed_max, v);
        return v;
    };

    PhaseAssignment current = start;
    double current_value = eval(current);
    std::vector<double> samples(kPhaseGridPoints);
    bool exhausted = false;

    while (res.sweeps < budget.max_sweeps && !exhausted) {
        const double sweep_start = current_value;
        for (std::size_t k = 0; k < PhaseAssignment::kCoordinates; ++k) {
            if (res.evaluations + kPhaseGridPoints + 1 > budget.max_evaluations) {
                exhausted = true;
                break;
            }
            PhaseAssignment probe = current;
            std::size_t best_j = 0;
            for (std::size_t j = 0; j < kPhaseGridPoints; ++j) {
                probe.coordinate(k) = step * static_cast<double>(j);
                samples[j] = eval(probe);
                if (sign * samples[j] > sign * samples[best_j]) {
                    best_j = j;
                }
            }
            double best_x = step * static_cast<double>(best_j);
            double best_v = samples[best_j];

            const detail::TrigInterpolant interp(samples);
            const double polished =
                wrap_phase(detail::polish_extremum(interp, best_x, sign, step));
            if (polished != best_x) {
                probe.coordinate(k) = polished;
                const double v = eval(probe);
                if (sign * v > sign * best_v) {
                    best_x = polished;
                    best_v = v;
                }
            }
            if (sign * best_v > sign * current_value) {
                current.coordinate(k) = best_x;
                current_value = best_v;
            }
        }
        ++res.sweeps;
        res.trace.push_back(current_value);
        if (!exhausted && sign * (current_value - sweep_start) < kSweepImprovementTol) {
            res.converged = true;
            break;
        }
    }

    res.best_phases = current;
    res.best_value = objective(current);
    return res;
}

/// Extremizes the per-qubit payoff of `seq` over all phases at bias `e`,
/// starting from all-zero phases.
inline OptimizationResult optimize_phases(const GameSequence &seq,
                                          const InitKind &init, EpsilonBias e,
                                          Direction dir,
                                          OptimizationBudget budget = {}) {
    const CircuitPlan plan = compile(seq);
    const StateVector start = initial_state_for(plan, init);
    return coordinate_search(
        [&](const PhaseAssignment &p) {
            return plan_payoff(plan, start, e, p, Normalization::PerQubit);
        },
        dir, PhaseAssignment{}, budget);
}

} // namespace qparrondo
