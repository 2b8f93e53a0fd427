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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

#include "qparrondo/circuit.hpp"
#include "qparrondo/coin_ops.hpp"
#include "qparrondo/payoff.hpp"

// Exact classical analysis of the biased-coin games: path enumeration for
// finite sequences, and the four-state history chain for repeated play.

namespace qparrondo {

/// Winning probabilities, B indexed by History (LL, LW, WL, WW).
struct ClassicalGameSpec {
    double a_win = 0.5;
    std::array<double, 4> b_win{};

    static ClassicalGameSpec from_bias(EpsilonBias e) {
        ClassicalGameSpec spec;
        spec.a_win = 1.0 - kGameALose - e.value();
        for (std::size_t i = 0; i < 4; ++i) {
            spec.b_win[i] = 1.0 - kGameBLose[i] - e.value();
        }
        spec.validate();
        return spec;
    }

    /// Every branch of B replaced by branch `h`.
    ClassicalGameSpec with_single_branch(History h) const {
        ClassicalGameSpec out = *this;
        out.b_win.fill(b_win[static_cast<std::size_t>(h)]);
        return out;
    }

    void validate() const {
        auto ok = [](double p) { return p > 0.0 && p < 1.0; };
        bool valid = ok(a_win);
        for (double p : b_win) {
            valid = valid && ok(p);
        }
        if (!valid) {
            throw NumericValidationError(
                "classical game probabilities must lie in (0, 1)");
        }
    }
};

/// Seeds drawn uniformly from {lost, won}.
struct UniformSeeds {};
/// Seeds fixed to a known history; a single seed uses `newer`.
struct FixedSeeds {
    bool older_won = false;
    bool newer_won = false;
};
using SeedChoice = std::variant<UniformSeeds, FixedSeeds>;

namespace detail {

struct PathEnumerator {
    const CircuitPlan &plan;
    const ClassicalGameSpec &spec;
    std::vector<bool> outcome; // indexed by qubit position - 1

    /// Σ over paths of probability × (wins − losses) over all qubits.
    double walk(std::size_t step, double weight) {
        if (weight == 0.0) {
            return 0.0;
        }
        if (step == plan.steps.size()) {
            int score = 0;
            for (bool won : outcome) {
                score += won ? 1 : -1;
            }
            return weight * score;
        }
        const CircuitStep &s = plan.steps[step];
        double p_win = spec.a_win;
        if (s.game == Game::B) {
            const std::size_t branch =
                (outcome[s.controls->hi.position - 1] ? 2U : 0U) |
                (outcome[s.controls->lo.position - 1] ? 1U : 0U);
            p_win = spec.b_win[branch];
        }
        double acc = 0.0;
        outcome[s.target.position - 1] = true;
        acc += walk(step + 1, weight * p_win);
        outcome[s.target.position - 1] = false;
        acc += walk(step + 1, weight * (1.0 - p_win));
        return acc;
    }
};

} // namespace detail

/// Exact expected payoff of `seq`, enumerating every seed assignment and
/// every outcome path. Seed qubits contribute their own ±1 like any other
/// qubit, so the per-qubit divisor matches the quantum convention.
inline double classical_sequence_payoff(const GameSequence &seq,
                                        const ClassicalGameSpec &spec,
                                        const SeedChoice &seeds,
                                        Normalization norm = Normalization::PerQubit) {
    spec.validate();
    const CircuitPlan plan = compile(seq);
    if (plan.total_qubits > kMaxQubits) {
        throw InvalidInput("classical_sequence_payoff: sequence too long");
    }
    detail::PathEnumerator walker{plan, spec,
                                  std::vector<bool>(plan.total_qubits, false)};
    const std::size_t s = plan.seed_count;
    double total = 0.0;
    if (std::holds_alternative<UniformSeeds>(seeds)) {
        const double w = 1.0 / static_cast<double>(std::uint64_t{1} << s);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s); ++bits) {
            for (std::size_t q = 0; q < s; ++q) {
                walker.outcome[q] = ((bits >> (s - 1 - q)) & 1U) != 0;
            }
            total += walker.walk(0, w);
        }
    } else {
        const auto fixed = std::get<FixedSeeds>(seeds);
        if (s == 2) {
            walker.outcome[0] = fixed.older_won;
            walker.outcome[1] = fixed.newer_won;
        } else if (s == 1) {
            walker.outcome[0] = fixed.newer_won;
        }
        total = walker.walk(0, 1.0);
    }
    return norm == Normalization::PerQubit ? per_qubit(total, plan.total_qubits)
                                           : total;
}

inline double classical_sequence_payoff(const GameSequence &seq, EpsilonBias e,
                                        const SeedChoice &seeds,
                                        Normalization norm = Normalization::PerQubit) {
    return classical_sequence_payoff(seq, ClassicalGameSpec::from_bias(e), seeds,
                                     norm);
}

/// Which game is played each round: A with probability `a_weight`, else B.
struct Policy {
    double a_weight = 0.0;

    static Policy pure_a() { return {1.0}; }
    static Policy pure_b() { return {0.0}; }
    static Policy mix(double q) {
        if (!(q >= 0.0 && q <= 1.0)) {
            throw InvalidInput("mixing weight must lie in [0, 1]");
        }
        return {q};
    }
};

/// Markov chain over the last two results, state index (older << 1) | newer.
struct HistoryChain {
    std::array<std::array<double, 4>, 4> transition{};
    std::array<double, 4> reward{}; ///< 2·P(win | state) − 1
};

inline HistoryChain build_history_chain(const Policy &policy,
                                        const ClassicalGameSpec &spec) {
    HistoryChain chain;
    for (std::size_t s = 0; s < 4; ++s) {
        const double p = policy.a_weight * spec.a_win +
                         (1.0 - policy.a_weight) * spec.b_win[s];
        const std::size_t newer = s & 1U;
        chain.transition[s][(newer << 1) | 1U] += p;
        chain.transition[s][newer << 1] += 1.0 - p;
        chain.reward[s] = 2.0 * p - 1.0;
    }
    return chain;
}

/// Solves πT = π, Σπ = 1 directly. Throws std::logic_error when the chain
/// has no unique stationary distribution.
inline std::array<double, 4> stationary_distribution(const HistoryChain &chain) {
    // (Tᵀ − I)π = 0 with the last balance row replaced by normalization.
    std::array<std::array<double, 5>, 4> m{};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m[r][c] = chain.transition[c][r] - (r == c ? 1.0 : 0.0);
        }
    }
    m[3] = {1.0, 1.0, 1.0, 1.0, 1.0};

    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) {
                pivot = r;
            }
        }
        if (std::abs(m[pivot][col]) < 1e-14) {
            throw std::logic_error("history chain is reducible");
        }
        std::swap(m[col], m[pivot]);
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col) {
                continue;
            }
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < 5; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    std::array<double, 4> pi{};
    for (std::size_t r = 0; r < 4; ++r) {
        pi[r] = m[r][4] / m[r][r];
    }
    return pi;
}

/// Long-run expected payoff per game.
inline double stationary_payoff(const Policy &policy, EpsilonBias e) {
    const HistoryChain chain =
        build_history_chain(policy, ClassicalGameSpec::from_bias(e));
    const auto pi = stationary_distribution(chain);
    double acc = 0.0;
    for (std::size_t s = 0; s < 4; ++s) {
        acc += pi[s] * chain.reward[s];
    }
    return acc;
}

inline constexpr double kThresholdSearchHi = 1.0 / 20.0;

/// Bisection for the zero of a payoff that decreases in ε on [lo, hi].
/// A payoff already zero at `lo` yields `lo`; no sign change yields nullopt.
template <class F>
std::optional<double> find_paradox_root(F &&payoff, double lo = 0.0,
                                        double hi = kThresholdSearchHi,
                                        double tol = 1e-10) {
    double f_lo = payoff(lo);
    const double f_hi = payoff(hi);
    if (std::abs(f_lo) <= kStructuralTol) {
        return lo;
    }
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        return std::nullopt;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = payoff(mid);
        if (f_mid > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Largest bias for which repeated play under `policy` still wins.
inline std::optional<double> stationary_threshold(const Policy &policy) {
    return find_paradox_root(
        [&](double eps) { return stationary_payoff(policy, EpsilonBias(eps)); });
}

/// Winning threshold of a finite sequence read off its first-order payoff
/// c0 + c1·ε, the same O(ε) form the payoff table reports.
inline std::optional<double> sequence_threshold(const GameSequence &seq,
                                                const SeedChoice &seeds = UniformSeeds{}) {
    const auto [c0, c1] = first_order_expansion(
        [&](EpsilonBias e) { return classical_sequence_payoff(seq, e, seeds); });
    return find_paradox_root([&](double eps) { return c0 + c1 * eps; });
}

/// Zero of the full (non-linearized) sequence payoff.
inline std::optional<double> sequence_threshold_exact(
    const GameSequence &seq, const SeedChoice &seeds = UniformSeeds{}) {
    return find_paradox_root([&](double eps) {
        return classical_sequence_payoff(seq, EpsilonBias(eps), seeds);
    });
}

} // namespace qparrondo
