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

#include <string>
#include <vector>

#include "json.hpp"

#include "qparrondo/analytic.hpp"
#include "qparrondo/circuit.hpp"
#include "qparrondo/coin_ops.hpp"

namespace qparrondo::cli {

using Report = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv };

/// Inputs shared by `payoff` and `optimize`.
struct RunConfig {
    std::string sequence;
    InitKind init = GhzInit{};
    double eps = 0.0;
    PhaseAssignment phases;
    bool per_qubit = true;
    OutputFormat format = OutputFormat::Json;
};

/// "zero", "ghz", or a path to a JSON [re, im] amplitude list.
InitKind parse_init(const std::string &value);
OutputFormat parse_format(const std::string &value);
Direction parse_direction(const std::string &value);

/// {sequence, init, qubits, eps, per_qubit, payoff_total, payoff_per_qubit,
///  c0, c1, phases}
Report cmd_payoff(const RunConfig &cfg);

/// Rebuilds a RunConfig from a `payoff` report (custom states excepted).
RunConfig config_from_report(const Report &report);

/// One object per table row.
Report cmd_table1(std::size_t repetitions);

Report cmd_optimize(const RunConfig &cfg, Direction dir);

enum class ClassicalMode { Sequence, Stationary, Threshold };

struct ClassicalConfig {
    ClassicalMode mode = ClassicalMode::Sequence;
    std::string sequence;     ///< sequence or threshold-of-sequence
    std::string policy;       ///< "A", "B" or "mix"
    double mix_weight = 0.5;  ///< weight of game A in "mix"
    double eps = 0.0;
    std::string seeds = "uniform"; ///< uniform | LL | LW | WL | WW
};

Report cmd_classical(const ClassicalConfig &cfg);

/// Renders a report: pretty JSON, or CSV with one line per row. A report
/// that is a JSON array yields one CSV row per element; nested objects are
/// flattened to dotted column names.
std::string render(const Report &report, OutputFormat format);

} // namespace qparrondo::cli
