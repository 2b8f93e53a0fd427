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

#include "qparrondo/coin_ops.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "dense_oracle.hpp"

using namespace qparrondo;
using C = std::complex<double>;

namespace {

void expect_matrix_near(const Unitary2 &u, const std::array<C, 4> &want, double tol) {
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LT(std::abs(u.entries()[i] - want[i]), tol) << "entry " << i;
    }
}

} // namespace

TEST(Su2Matrix, ZeroAnglesIsIdentity) {
    expect_matrix_near(su2_matrix({0, 0, 0}), {1.0, 0.0, 0.0, 1.0}, 1e-15);
}

TEST(Su2Matrix, QuarterTurnNoPhases) {
    const double h = std::sqrt(2.0) / 2;
    expect_matrix_near(su2_matrix({kPi / 4, 0, 0}), {h, -h, h, h}, 1e-15);
}

TEST(Su2Matrix, PhasedHalfTurn) {
    // θ = π/2, γ = π, δ = π/2: diagonal vanishes, off-diagonals pick up
    // e^{∓i(γ−δ)/2} = e^{∓iπ/4}.
    const C off_lo = std::polar(1.0, kPi / 4);
    const C off_hi = -std::polar(1.0, -kPi / 4);
    expect_matrix_near(su2_matrix({kPi / 2, kPi, kPi / 2}), {0.0, off_hi, off_lo, 0.0}, 1e-15);
}

TEST(Su2Matrix, RejectsOutOfRange) {
    EXPECT_THROW(su2_matrix({4.0, 0, 0}), InvalidInput);
    EXPECT_THROW(su2_matrix({0, -0.1, 0}), InvalidInput);
    EXPECT_THROW(su2_matrix({0, 0, 7.0}), InvalidInput);
}

TEST(LoseProbToTheta, Examples) {
    EXPECT_NEAR(lose_prob_to_theta(0.5), kPi / 4, 1e-15);
    EXPECT_EQ(lose_prob_to_theta(1.0), 0.0);
    const double t = lose_prob_to_theta(0.1);
    EXPECT_NEAR(t, 1.2490458, 1e-7);
    EXPECT_NEAR(std::cos(t) * std::cos(t), 0.1, 1e-12);
    EXPECT_THROW(lose_prob_to_theta(-0.01), InvalidInput);
    EXPECT_THROW(lose_prob_to_theta(1.01), InvalidInput);
}

TEST(GameA, FromBias) {
    EXPECT_EQ(game_a_from_bias(EpsilonBias{}, 0, 0), (CoinParams{kPi / 4, 0, 0}));
    const auto a = game_a_from_bias(EpsilonBias(0.01), 0, 0);
    EXPECT_NEAR(a.theta, 0.7753975, 1e-7);
    EXPECT_NEAR(std::cos(a.theta) * std::cos(a.theta), 0.51, 1e-12);
    EXPECT_EQ(game_a_from_bias(EpsilonBias{}, 1.0, 2.0), (CoinParams{kPi / 4, 1.0, 2.0}));
}

TEST(GameB, FromBiasAngles) {
    const auto b = game_b_from_bias(EpsilonBias{}, {});
    EXPECT_NEAR(b.branches[0].theta, 1.2490458, 1e-7);
    EXPECT_NEAR(b.branches[1].theta, kPi / 6, 1e-15);
    EXPECT_NEAR(b.branches[2].theta, kPi / 6, 1e-15);
    EXPECT_NEAR(b.branches[3].theta, 0.9911566, 1e-7);
    const std::array<double, 4> lose = {0.1, 0.75, 0.75, 0.3};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::pow(std::cos(b.branches[i].theta), 2), lose[i], 1e-12);
    }
}

TEST(GameB, WinProbabilitiesAtZeroBias) {
    const auto b = game_b_from_bias(EpsilonBias{}, {});
    const std::array<double, 4> win = {0.9, 0.25, 0.25, 0.7};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::pow(std::sin(b.branches[i].theta), 2), win[i], 1e-12);
    }
    EXPECT_EQ(b[History::WonWon].theta, b.branches[3].theta);
}

TEST(GameB, BiasShiftsEveryLoseProbability) {
    const double eps = 1.0 / 168;
    const auto b0 = game_b_from_bias(EpsilonBias{}, {});
    const auto b1 = game_b_from_bias(EpsilonBias(eps), {});
    for (std::size_t i = 0; i < 4; ++i) {
        const double p0 = std::pow(std::cos(b0.branches[i].theta), 2);
        const double p1 = std::pow(std::cos(b1.branches[i].theta), 2);
        EXPECT_NEAR(p1 - p0, eps, 1e-12);
    }
}

TEST(GameB, PhasesPassThrough) {
    std::array<BranchPhase, 4> ph = {{{0.1, 0.2}, {0.3, 0.4}, {0.5, 0.6}, {0.7, 0.8}}};
    const auto b = game_b_from_bias(EpsilonBias{}, ph);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(b.branches[i].gamma, ph[i].alpha);
        EXPECT_EQ(b.branches[i].delta, ph[i].beta);
    }
}

TEST(EpsilonBias, Range) {
    EXPECT_NO_THROW(EpsilonBias(0.0999));
    EXPECT_NO_THROW(EpsilonBias(-0.0999));
    EXPECT_THROW(EpsilonBias(0.1), NumericValidationError);
    EXPECT_THROW(EpsilonBias(-0.2), NumericValidationError);
    EXPECT_THROW(EpsilonBias(std::nan("")), NumericValidationError);
}

TEST(PhaseAssignment, CoordinateOrder) {
    PhaseAssignment p;
    for (std::size_t k = 0; k < PhaseAssignment::kCoordinates; ++k) {
        p.coordinate(k) = static_cast<double>(k);
    }
    EXPECT_EQ(p.gamma, 0.0);
    EXPECT_EQ(p.delta, 1.0);
    EXPECT_EQ(p.b[0].alpha, 2.0);
    EXPECT_EQ(p.b[3].alpha, 5.0);
    EXPECT_EQ(p.b[0].beta, 6.0);
    EXPECT_EQ(p.b[3].beta, 9.0);
}

// --- properties -----------------------------------------------------------

TEST(Su2Properties, UnitaryWithUnitDeterminant) {
    std::mt19937_64 rng(20);
    for (int i = 0; i < 10000; ++i) {
        const auto u = su2_matrix(oracle::random_coin(rng));
        EXPECT_TRUE(u.is_unitary(1e-12));
        EXPECT_NEAR(std::abs(u.determinant()), 1.0, 1e-12);
    }
}

TEST(Su2Properties, ProbabilityRoundTrip) {
    for (double eps : {-0.05, 0.0, 1.0 / 168, 1.0 / 112, 0.05}) {
        const auto u = su2_matrix(game_a_from_bias(EpsilonBias(eps), 0.4, 1.9));
        EXPECT_NEAR(std::norm(u(0, 0)), 0.5 + eps, 1e-12) << eps;
    }
}

TEST(Su2Properties, ModuliIndependentOfPhases) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ph(0.0, kTwoPi);
    for (int i = 0; i < 1000; ++i) {
        const auto p = oracle::random_coin(rng);
        const auto u = su2_matrix(p);
        const auto v = su2_matrix({p.theta, ph(rng), ph(rng)});
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(std::abs(u.entries()[k]), std::abs(v.entries()[k]), 1e-12);
        }
    }
}

TEST(WrapPhase, ReducesIntoPeriod) {
    EXPECT_NEAR(wrap_phase(-kPi / 2), 1.5 * kPi, 1e-15);
    EXPECT_EQ(wrap_phase(0.0), 0.0);
    EXPECT_NEAR(wrap_phase(5 * kPi), kPi, 1e-14);
    EXPECT_LT(wrap_phase(-1e-18), kTwoPi);
}
