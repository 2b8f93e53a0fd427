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

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "qparrondo/analytic.hpp"
#include "qparrondo/circuit.hpp"
#include "qparrondo/classical.hpp"
#include "qparrondo/payoff.hpp"

namespace qparrondo {

/// One row of the per-qubit payoff table, every entry as (c0, c1).
struct PayoffTableRow {
    std::string label;    ///< e.g. "AA...A"
    std::string sequence; ///< concrete sequence simulated
    PayoffExpansion classical;
    PayoffExpansion quantum; ///< GHZ start, zero phases
    std::optional<PayoffExpansion> quantum_min;
    std::optional<PayoffExpansion> quantum_max;
};

struct TableRowSpec {
    std::string label;
    std::string sequence;
    bool phase_extremes = false;
};

/// The standard row set. Repeated patterns use `repetitions` copies.
inline std::vector<TableRowSpec> standard_table_rows(std::size_t repetitions = 4) {
    const std::string as = GameSequence::repeat("A", repetitions).str();
    const std::string aabs = GameSequence::repeat("AAB", repetitions).str();
    return {
        {"AA...A", as, false},     {"B", "B", false},
        {"BB", "BB", false},       {"BBB", "BBB", false},
        {"AB", "AB", false},       {"ABAB", "ABAB", false},
        {"AAB", "AAB", true},      {"AAB...AAB", aabs, false},
    };
}

inline PayoffTableRow compute_table_row(const TableRowSpec &spec, double h = 1e-4) {
    const GameSequence seq = GameSequence::parse(spec.sequence);
    PayoffTableRow row;
    row.label = spec.label;
    row.sequence = spec.sequence;
    const auto [cc0, cc1] = first_order_expansion(
        [&](EpsilonBias e) { return classical_sequence_payoff(seq, e, UniformSeeds{}); },
        h);
    row.classical = {cc0, cc1, true};
    row.quantum = payoff_epsilon_expansion(seq, GhzInit{}, PhaseAssignment{}, h);
    if (spec.phase_extremes) {
        row.quantum_min = payoff_epsilon_expansion(
            seq, GhzInit{}, aab_extremal_phases(Direction::Min, 0.0), h);
        row.quantum_max = payoff_epsilon_expansion(
            seq, GhzInit{}, aab_extremal_phases(Direction::Max, 0.0), h);
    }
    return row;
}

/// Rows are independent and computed concurrently.
inline std::vector<PayoffTableRow> reproduce_payoff_table(std::size_t repetitions = 4) {
    const auto specs = standard_table_rows(repetitions);
    std::vector<std::future<PayoffTableRow>> jobs;
    jobs.reserve(specs.size());
    for (const auto &s : specs) {
        jobs.push_back(std::async(std::launch::async,
                                  [s] { return compute_table_row(s); }));
    }
    std::vector<PayoffTableRow> rows;
    rows.reserve(jobs.size());
    for (auto &j : jobs) {
        rows.push_back(j.get());
    }
    return rows;
}

} // namespace qparrondo
