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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qparrondo/coin_ops.hpp"
#include "qparrondo/statevector.hpp"

// Wiring of A/B sequences onto qubits.
//
// Every game writes its outcome to a fresh qubit. A game B is controlled by
// the two most recent outcomes before it (older -> control_hi). When the
// sequence does not provide two outcomes before its first B, seed qubits are
// prepended as the missing history. This reproduces the three standard
// layouts (B..B, ABAB.., AAB AAB..) and extends them to any string.

namespace qparrondo {

enum class Game : char { A = 'A', B = 'B' };

/// Non-empty string over {A, B}, e.g. "AAB".
class GameSequence {
  public:
    static GameSequence parse(std::string_view text) {
        if (text.empty()) {
            throw InvalidInput("sequence: must not be empty");
        }
        GameSequence seq;
        seq.games_.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c != 'A' && c != 'B') {
                throw InvalidInput("sequence: invalid token '" + std::string(1, c) +
                                   "' at position " + std::to_string(i) +
                                   " (expected 'A' or 'B')");
            }
            seq.games_.push_back(static_cast<Game>(c));
        }
        return seq;
    }

    /// `block` repeated `times` times.
    static GameSequence repeat(std::string_view block, std::size_t times) {
        if (times == 0) {
            throw InvalidInput("sequence: repetition count must be positive");
        }
        std::string text;
        for (std::size_t i = 0; i < times; ++i) {
            text += block;
        }
        return parse(text);
    }

    std::size_t size() const { return games_.size(); }
    const std::vector<Game> &games() const { return games_; }
    Game operator[](std::size_t i) const { return games_[i]; }

    std::string str() const {
        std::string s;
        for (Game g : games_) {
            s.push_back(static_cast<char>(g));
        }
        return s;
    }

    friend bool operator==(const GameSequence &, const GameSequence &) = default;

  private:
    GameSequence() = default;
    std::vector<Game> games_;
};

struct Controls {
    Qubit hi; ///< older outcome
    Qubit lo; ///< newer outcome

    friend bool operator==(const Controls &, const Controls &) = default;
};

struct CircuitStep {
    Game game = Game::A;
    Qubit target;
    std::optional<Controls> controls; ///< set iff game == B

    friend bool operator==(const CircuitStep &, const CircuitStep &) = default;
};

struct CircuitPlan {
    std::size_t seed_count = 0;
    std::size_t total_qubits = 0;
    std::vector<CircuitStep> steps;

    friend bool operator==(const CircuitPlan &, const CircuitPlan &) = default;
};

inline CircuitPlan compile(const GameSequence &seq) {
    const auto &games = seq.games();
    const auto first_b = std::find(games.begin(), games.end(), Game::B);
    std::size_t seeds = 0;
    if (first_b != games.end()) {
        const auto before = static_cast<std::size_t>(first_b - games.begin());
        seeds = before >= 2 ? 0 : 2 - before;
    }

    CircuitPlan plan;
    plan.seed_count = seeds;
    plan.total_qubits = seeds + games.size();
    plan.steps.reserve(games.size());

    // Outcome history, oldest first. Seeds count as outcomes.
    std::vector<Qubit> history;
    for (std::size_t q = 1; q <= seeds; ++q) {
        history.push_back(Qubit{q});
    }
    for (std::size_t k = 0; k < games.size(); ++k) {
        CircuitStep step;
        step.game = games[k];
        step.target = Qubit{seeds + k + 1};
        if (step.game == Game::B) {
            step.controls = Controls{history[history.size() - 2], history.back()};
        }
        plan.steps.push_back(step);
        history.push_back(step.target);
    }
    return plan;
}

/// Executes `plan` on `init`. Game A uses su2_matrix(a); game B uses the
/// four branch matrices of `b`.
inline StateVector run(const CircuitPlan &plan, const CoinParams &a,
                       const GameBSpec &b, StateVector init) {
    if (init.num_qubits() != plan.total_qubits) {
        throw InvalidInput("run: initial state has " +
                           std::to_string(init.num_qubits()) +
                           " qubits, plan needs " +
                           std::to_string(plan.total_qubits));
    }
    const Unitary2 ua = su2_matrix(a);
    const std::array<Unitary2, 4> ub = {su2_matrix(b.branches[0]),
                                        su2_matrix(b.branches[1]),
                                        su2_matrix(b.branches[2]),
                                        su2_matrix(b.branches[3])};
    for (const auto &step : plan.steps) {
        if (step.game == Game::A) {
            apply_single_qubit_inplace(init, step.target, ua);
        } else {
            apply_two_controlled_multiplexed_inplace(init, step.controls->hi,
                                                     step.controls->lo,
                                                     step.target, ub);
        }
    }
    return init;
}

struct AllZeroInit {};
struct GhzInit {};
struct CustomInit {
    std::vector<Amplitude> amplitudes;
};

/// Choice of initial state for a plan.
using InitKind = std::variant<AllZeroInit, GhzInit, CustomInit>;

inline StateVector initial_state_for(const CircuitPlan &plan,
                                     const InitKind &kind) {
    return std::visit(
        [&](const auto &k) -> StateVector {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, AllZeroInit>) {
                return StateVector::basis(plan.total_qubits, 0);
            } else if constexpr (std::is_same_v<K, GhzInit>) {
                return make_ghz(plan.total_qubits);
            } else {
                return StateVector::from_amplitudes(plan.total_qubits,
                                                    k.amplitudes);
            }
        },
        kind);
}

inline std::string init_name(const InitKind &kind) {
    switch (kind.index()) {
    case 0:
        return "zero";
    case 1:
        return "ghz";
    default:
        return "custom";
    }
}

} // namespace qparrondo
