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

#include "qparrondo/classical.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "dense_oracle.hpp"

using namespace qparrondo;

namespace {

std::pair<double, double> classical_expansion(const char *seq,
                                              const SeedChoice &seeds = UniformSeeds{}) {
    const auto s = GameSequence::parse(seq);
    return first_order_expansion(
        [&](EpsilonBias e) { return classical_sequence_payoff(s, e, seeds); });
}

/// Monte Carlo play of a sequence with uniform seeds; returns mean and
/// standard error of the per-qubit payoff.
std::pair<double, double> monte_carlo(const std::string &text, double eps, std::size_t trials,
                                      std::uint64_t seed) {
    const auto spec = ClassicalGameSpec::from_bias(EpsilonBias(eps));
    const auto plan = compile(GameSequence::parse(text));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double sum = 0.0;
    double sum2 = 0.0;
    std::vector<int> won(plan.total_qubits);
    for (std::size_t t = 0; t < trials; ++t) {
        for (std::size_t q = 0; q < plan.seed_count; ++q) won[q] = u(rng) < 0.5;
        for (const auto &s : plan.steps) {
            double p = spec.a_win;
            if (s.game == Game::B) {
                p = spec.b_win[2 * won[s.controls->hi.position - 1] +
                               won[s.controls->lo.position - 1]];
            }
            won[s.target.position - 1] = u(rng) < p;
        }
        double score = 0.0;
        for (int w : won) score += w ? 1.0 : -1.0;
        score /= static_cast<double>(plan.total_qubits);
        sum += score;
        sum2 += score * score;
    }
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    return {mean, std::sqrt((sum2 / n - mean * mean) / n)};
}

} // namespace

TEST(ClassicalGameSpec, FromBiasAndValidation) {
    const auto s = ClassicalGameSpec::from_bias(EpsilonBias(0.01));
    EXPECT_NEAR(s.a_win, 0.49, 1e-15);
    EXPECT_NEAR(s.b_win[0], 0.89, 1e-15);
    EXPECT_NEAR(s.b_win[1], 0.24, 1e-15);
    EXPECT_NEAR(s.b_win[3], 0.69, 1e-15);
    ClassicalGameSpec bad;
    bad.b_win = {0.5, 0.5, 1.0, 0.5};
    EXPECT_THROW(bad.validate(), NumericValidationError);
}

TEST(ClassicalSequence, SingleB) {
    const auto [c0, c1] = classical_expansion("B");
    EXPECT_NEAR(c0, 1.0 / 60, 1e-12);
    EXPECT_NEAR(c1, -2.0 / 3, 1e-6);
}

TEST(ClassicalSequence, AAB) {
    const auto [c0, c1] = classical_expansion("AAB");
    EXPECT_NEAR(c0, 1.0 / 60, 1e-12);
    EXPECT_NEAR(c1, -28.0 / 15, 1e-6);
}

TEST(ClassicalSequence, AABWithBestBranchOnly) {
    for (double eps : {0.0, 0.003, -0.01, 0.05}) {
        const auto spec = ClassicalGameSpec::from_bias(EpsilonBias(eps)).with_single_branch(
            History::LostLost);
        const double total = classical_sequence_payoff(GameSequence::parse("AAB"), spec,
                                                       UniformSeeds{}, Normalization::Total);
        EXPECT_NEAR(total, 0.8 - 6 * eps, 1e-12) << eps;
    }
}

TEST(ClassicalSequence, PureA) {
    for (double eps : {0.0, 0.01, 0.02}) {
        EXPECT_NEAR(classical_sequence_payoff(GameSequence::parse("AAAA"), EpsilonBias(eps),
                                              UniformSeeds{}),
                    -2 * eps, 1e-12);
    }
}

// Exact under the shared per-qubit convention; computed independently with
// a path-enumeration prototype.
TEST(ClassicalSequence, LongerRowsMatchPrototype) {
    auto [bb0, bb1] = classical_expansion("BB");
    EXPECT_NEAR(bb0, 0.01, 1e-12);
    EXPECT_NEAR(bb1, -0.95, 1e-6);
    auto [bbb0, bbb1] = classical_expansion("BBB");
    EXPECT_NEAR(bbb0, 0.007575, 1e-12);
    EXPECT_NEAR(bbb1, -1.106, 1e-6);
    auto [abab0, abab1] = classical_expansion("ABAB");
    EXPECT_NEAR(abab0, 0.019, 1e-12);
    EXPECT_NEAR(abab1, -1.495, 1e-6);
}

TEST(ClassicalSequence, FixedSeeds) {
    // B from (lost, lost): win 9/10 on the target, both seeds lose.
    const double v = classical_sequence_payoff(GameSequence::parse("B"), EpsilonBias{},
                                               FixedSeeds{}, Normalization::Total);
    EXPECT_NEAR(v, -2 + 0.8, 1e-12);
    const double ww = classical_sequence_payoff(GameSequence::parse("B"), EpsilonBias{},
                                                FixedSeeds{true, true}, Normalization::Total);
    EXPECT_NEAR(ww, 2 + 0.4, 1e-12);
}

TEST(ClassicalSequence, AgreesWithMonteCarlo) {
    const double eps = 0.001;
    const double exact =
        classical_sequence_payoff(GameSequence::parse("BB"), EpsilonBias(eps), UniformSeeds{});
    const auto [mean, se] = monte_carlo("BB", eps, 1'000'000, 2026);
    EXPECT_LT(std::abs(mean - exact), 3 * se);
}

TEST(Stationary, PureA) {
    for (double eps : {0.0, 0.005, 0.01}) {
        EXPECT_NEAR(stationary_payoff(Policy::pure_a(), EpsilonBias(eps)), -2 * eps, 1e-12);
    }
}

TEST(Stationary, PureBBreaksEvenWithoutBias) {
    EXPECT_NEAR(stationary_payoff(Policy::pure_b(), EpsilonBias{}), 0.0, 1e-12);
}

TEST(Stationary, HalfMixWinsWithoutBias) {
    EXPECT_GT(stationary_payoff(Policy::mix(0.5), EpsilonBias{}), 0.0);
}

TEST(Stationary, RejectsBadMix) {
    EXPECT_THROW(Policy::mix(1.5), InvalidInput);
}

TEST(Stationary, ReducibleChainReported) {
    HistoryChain chain;
    for (std::size_t s = 0; s < 4; ++s) chain.transition[s][s] = 1.0;
    EXPECT_THROW(stationary_distribution(chain), std::logic_error);
}

TEST(Threshold, SequenceAAB) {
    const auto t = sequence_threshold(GameSequence::parse("AAB"));
    ASSERT_TRUE(t);
    EXPECT_NEAR(*t, 1.0 / 112, 1e-6);
    // the full payoff crosses zero slightly later than its linearization
    const auto exact = sequence_threshold_exact(GameSequence::parse("AAB"));
    ASSERT_TRUE(exact);
    EXPECT_GT(*exact, *t);
    EXPECT_NEAR(classical_sequence_payoff(GameSequence::parse("AAB"), EpsilonBias(*exact),
                                          UniformSeeds{}),
                0.0, 1e-10);
}

TEST(Threshold, HalfMix) {
    const auto t = stationary_threshold(Policy::mix(0.5));
    ASSERT_TRUE(t);
    EXPECT_NEAR(*t, 1.0 / 168, 1e-6);
}

TEST(Threshold, PureAIsZero) {
    const auto t = stationary_threshold(Policy::pure_a());
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, 0.0);
}

TEST(Threshold, NoSignChange) {
    EXPECT_FALSE(find_paradox_root([](double) { return 1.0; }));
    EXPECT_FALSE(find_paradox_root([](double) { return -1.0; }));
}

// --- properties -----------------------------------------------------------

TEST(StationaryProperties, ValidDistribution) {
    std::mt19937_64 rng(60);
    std::uniform_real_distribution<double> q(0.0, 1.0);
    std::uniform_real_distribution<double> e(-0.05, 0.05);
    for (int i = 0; i < 200; ++i) {
        const auto chain =
            build_history_chain(Policy::mix(q(rng)), ClassicalGameSpec::from_bias(EpsilonBias(e(rng))));
        for (const auto &row : chain.transition) {
            EXPECT_NEAR(row[0] + row[1] + row[2] + row[3], 1.0, 1e-12);
        }
        for (double r : chain.reward) EXPECT_LE(std::abs(r), 1.0);
        const auto pi = stationary_distribution(chain);
        double sum = 0.0;
        for (double p : pi) {
            EXPECT_GE(p, -1e-15);
            sum += p;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
        for (std::size_t c = 0; c < 4; ++c) {
            double flow = 0.0;
            for (std::size_t r = 0; r < 4; ++r) flow += pi[r] * chain.transition[r][c];
            EXPECT_NEAR(flow, pi[c], 1e-12);
        }
    }
}

TEST(ClassicalProperties, FixedSeedsMatchQuantumAllZero) {
    std::mt19937_64 rng(61);
    for (const char *seq : {"AAAA", "B", "BB", "BBB", "AB", "ABAB", "AAB", "AABAABAABAAB", "BAB",
                            "ABBA"}) {
        for (double eps : {0.0, 0.004}) {
            const auto s = GameSequence::parse(seq);
            const double classical =
                classical_sequence_payoff(s, EpsilonBias(eps), FixedSeeds{});
            const double quantum =
                sequence_payoff(s, AllZeroInit{}, EpsilonBias(eps), oracle::random_phases(rng));
            EXPECT_NEAR(quantum, classical, 1e-9) << seq;
        }
    }
}
