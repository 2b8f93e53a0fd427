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
#include <complex>
#include <string>
#include <utility>

#include "qparrondo/common.hpp"
#include "qparrondo/statevector.hpp"

// Coin operators for games A and B.
//
// Encoding: |0> = lose, |1> = win. A coin with amplitude angle theta maps
// |0> to amplitudes of modulus (cos θ, sin θ), so a target starting at |0>
// loses with probability cos²θ.
//
// NOTE: on a target that starts at |1> the same operator wins with
// probability cos²θ. That is not how a classical coin behaves; it is the
// operator's exact action and the quantum payoffs depend on it.

namespace qparrondo {

/// Bias ε applied to every coin's losing probability. |ε| < 1/10 keeps the
/// tightest branch (lose 1/10 + ε) inside (0, 1).
class EpsilonBias {
  public:
    static constexpr double kLimit = 0.1;

    constexpr EpsilonBias() = default;
    explicit EpsilonBias(double eps) : eps_(eps) {
        if (!(std::abs(eps) < kLimit)) {
            throw NumericValidationError("epsilon " + std::to_string(eps) +
                                         " outside (-0.1, 0.1)");
        }
    }

    constexpr double value() const { return eps_; }

  private:
    double eps_ = 0.0;
};

/// Angles of one SU(2) coin: theta ∈ [-π, π], gamma, delta ∈ [0, 2π].
struct CoinParams {
    double theta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;

    friend bool operator==(const CoinParams &, const CoinParams &) = default;
};

/// History index of game B, older result first.
enum class History : std::size_t { LostLost = 0, LostWon = 1, WonLost = 2, WonWon = 3 };

/// The four coins B1..B4 of game B, indexed by History.
struct GameBSpec {
    std::array<CoinParams, 4> branches{};

    const CoinParams &operator[](History h) const {
        return branches[static_cast<std::size_t>(h)];
    }
};

struct BranchPhase {
    double alpha = 0.0;
    double beta = 0.0;

    friend bool operator==(const BranchPhase &, const BranchPhase &) = default;
};

/// Every free phase of one A/B game pair; the amplitude angles come from
/// the bias. Ten real coordinates in total.
struct PhaseAssignment {
    double gamma = 0.0;
    double delta = 0.0;
    std::array<BranchPhase, 4> b{};

    static constexpr std::size_t kCoordinates = 10;

    /// Coordinate order: gamma, delta, alpha1..4, beta1..4.
    double &coordinate(std::size_t k) { return coordinate_ref<double>(*this, k); }
    double coordinate(std::size_t k) const {
        return coordinate_ref<const double>(*this, k);
    }

    friend bool operator==(const PhaseAssignment &,
                           const PhaseAssignment &) = default;

  private:
    template <class T, class Self>
    static T &coordinate_ref(Self &self, std::size_t k) {
        if (k == 0) return self.gamma;
        if (k == 1) return self.delta;
        if (k < 6) return self.b[k - 2].alpha;
        return self.b.at(k - 6).beta;
    }
};

/// Losing probabilities of the unbiased games.
inline constexpr double kGameALose = 0.5;
inline constexpr std::array<double, 4> kGameBLose = {0.1, 0.75, 0.75, 0.3};

inline Unitary2 su2_matrix(const CoinParams &p) {
    const double slack = kStructuralTol;
    if (!(p.theta >= -kPi - slack && p.theta <= kPi + slack)) {
        throw InvalidInput("su2_matrix: theta " + std::to_string(p.theta) +
                           " outside [-pi, pi]");
    }
    if (!(p.gamma >= -slack && p.gamma <= kTwoPi + slack)) {
        throw InvalidInput("su2_matrix: gamma " + std::to_string(p.gamma) +
                           " outside [0, 2pi]");
    }
    if (!(p.delta >= -slack && p.delta <= kTwoPi + slack)) {
        throw InvalidInput("su2_matrix: delta " + std::to_string(p.delta) +
                           " outside [0, 2pi]");
    }
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const double sum = 0.5 * (p.gamma + p.delta);
    const double diff = 0.5 * (p.gamma - p.delta);
    return {std::polar(c, -sum), -std::polar(s, -diff), std::polar(s, diff),
            std::polar(c, sum)};
}

/// theta = arccos(√p) ∈ [0, π/2], so cos²θ = p_lose.
inline double lose_prob_to_theta(double p_lose) {
    if (!(p_lose >= 0.0 && p_lose <= 1.0)) {
        throw InvalidInput("lose probability " + std::to_string(p_lose) +
                           " outside [0, 1]");
    }
    return std::acos(std::sqrt(p_lose));
}

inline CoinParams game_a_from_bias(EpsilonBias e, double gamma, double delta) {
    return {lose_prob_to_theta(kGameALose + e.value()), gamma, delta};
}

inline GameBSpec game_b_from_bias(EpsilonBias e,
                                  const std::array<BranchPhase, 4> &phases) {
    GameBSpec spec;
    for (std::size_t i = 0; i < 4; ++i) {
        spec.branches[i] = {lose_prob_to_theta(kGameBLose[i] + e.value()),
                            phases[i].alpha, phases[i].beta};
    }
    return spec;
}

/// Amplitude angles of both games at a given bias.
struct CoinAngles {
    double theta = 0.0;
    std::array<double, 4> phis{};
};

inline CoinAngles coin_angles(EpsilonBias e) {
    CoinAngles out;
    out.theta = lose_prob_to_theta(kGameALose + e.value());
    for (std::size_t i = 0; i < 4; ++i) {
        out.phis[i] = lose_prob_to_theta(kGameBLose[i] + e.value());
    }
    return out;
}

/// Both games, built from the bias and a full phase assignment.
struct GamePair {
    CoinParams a;
    GameBSpec b;
};

inline GamePair games_from_bias(EpsilonBias e, const PhaseAssignment &phases) {
    return {game_a_from_bias(e, phases.gamma, phases.delta),
            game_b_from_bias(e, phases.b)};
}

/// Central-difference first-order expansion f(ε) ≈ c0 + c1·ε around ε = 0.
/// Throws if ±h is not a valid bias.
template <class F>
std::pair<double, double> first_order_expansion(F &&f, double h = 1e-4) {
    const EpsilonBias lo(-h);
    const EpsilonBias hi(h);
    const double c0 = f(EpsilonBias{});
    const double c1 = (f(hi) - f(lo)) / (2.0 * h);
    return {c0, c1};
}

} // namespace qparrondo
