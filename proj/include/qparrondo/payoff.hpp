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

#include <bit>
#include <cmath>
#include <cstdint>
#include <future>

#include "qparrondo/circuit.hpp"
#include "qparrondo/coin_ops.hpp"
#include "qparrondo/statevector.hpp"

namespace qparrondo {

/// Expected payoff with +1 per |1> and -1 per |0>, summed over every qubit:
/// Σ (2·popcount(i) − n)·|a_i|². Lies in [−n, n].
inline double payoff_expectation(const StateVector &state) {
    const auto n = static_cast<int>(state.num_qubits());
    const auto amps = state.amplitudes();
    double acc = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        acc += (2 * std::popcount(i) - n) * std::norm(amps[i]);
    }
    return acc;
}

/// Payoff over game outcomes only, skipping the leading `seed_count` qubits.
/// Diagnostic; the reported numbers always use payoff_expectation.
inline double outcome_payoff(const StateVector &state, std::size_t seed_count) {
    if (seed_count >= state.num_qubits()) {
        throw InvalidInput("outcome_payoff: seed count exceeds qubit count");
    }
    const auto n = static_cast<int>(state.num_qubits() - seed_count);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const auto amps = state.amplitudes();
    double acc = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        acc += (2 * std::popcount(i & mask) - n) * std::norm(amps[i]);
    }
    return acc;
}

/// Divides by the plan's total qubit count, seeds included.
inline double per_qubit(double total, std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw InvalidInput("per_qubit: qubit count must be positive");
    }
    return total / static_cast<double>(num_qubits);
}

enum class Normalization { Total, PerQubit };

/// Payoff ≈ c0 + c1·ε.
struct PayoffExpansion {
    double c0 = 0.0;
    double c1 = 0.0;
    bool per_qubit = true;
};

/// Runs a compiled plan at bias `e` with `phases` and returns its payoff.
inline double plan_payoff(const CircuitPlan &plan, const StateVector &init,
                          EpsilonBias e, const PhaseAssignment &phases,
                          Normalization norm = Normalization::PerQubit) {
    const auto games = games_from_bias(e, phases);
    const double total = payoff_expectation(run(plan, games.a, games.b, init));
    return norm == Normalization::PerQubit ? per_qubit(total, plan.total_qubits)
                                           : total;
}

inline double sequence_payoff(const GameSequence &seq, const InitKind &init,
                              EpsilonBias e, const PhaseAssignment &phases,
                              Normalization norm = Normalization::PerQubit) {
    const CircuitPlan plan = compile(seq);
    return plan_payoff(plan, initial_state_for(plan, init), e, phases, norm);
}

/// First-order ε-expansion by central difference with step `h`. The three
/// evaluations run concurrently.
inline PayoffExpansion payoff_epsilon_expansion(
    const GameSequence &seq, const InitKind &init, const PhaseAssignment &phases,
    double h = 1e-4, Normalization norm = Normalization::PerQubit) {
    const CircuitPlan plan = compile(seq);
    const StateVector start = initial_state_for(plan, init);
    const EpsilonBias lo(-h);
    const EpsilonBias hi(h);
    auto eval = [&](EpsilonBias e) {
        return plan_payoff(plan, start, e, phases, norm);
    };
    auto f_lo = std::async(std::launch::async, eval, lo);
    auto f_hi = std::async(std::launch::async, eval, hi);
    const double c0 = eval(EpsilonBias{});
    const double c1 = (f_hi.get() - f_lo.get()) / (2.0 * h);
    return {c0, c1, norm == Normalization::PerQubit};
}

} // namespace qparrondo
