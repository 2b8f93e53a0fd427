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

#include "cli_commands.hpp"

#include <sstream>
#include <utility>

#include "qparrondo/classical.hpp"
#include "qparrondo/io.hpp"
#include "qparrondo/optimizer.hpp"
#include "qparrondo/payoff.hpp"
#include "qparrondo/table.hpp"

namespace qparrondo::cli {

namespace {

double out(double v) { return io::round_for_output(v); }

Report expansion_json(const std::optional<PayoffExpansion> &e) {
    if (!e) {
        return {{"c0", nullptr}, {"c1", nullptr}};
    }
    return {{"c0", out(e->c0)}, {"c1", out(e->c1)}};
}

Report phases_report(const PhaseAssignment &p) {
    return Report::parse(io::phases_to_json(p).dump());
}

std::string direction_name(Direction d) { return d == Direction::Max ? "max" : "min"; }

SeedChoice parse_seeds(const std::string &s) {
    if (s == "uniform") return UniformSeeds{};
    if (s == "LL") return FixedSeeds{false, false};
    if (s == "LW") return FixedSeeds{false, true};
    if (s == "WL") return FixedSeeds{true, false};
    if (s == "WW") return FixedSeeds{true, true};
    throw InvalidInput("--seeds: expected uniform, LL, LW, WL or WW, got '" + s + "'");
}

Policy parse_policy(const std::string &name, double mix_weight) {
    if (name == "A") return Policy::pure_a();
    if (name == "B") return Policy::pure_b();
    if (name == "mix") return Policy::mix(mix_weight);
    throw InvalidInput("--policy: expected A, B or mix, got '" + name + "'");
}

Report optional_number(const std::optional<double> &v) {
    return v ? Report(out(*v)) : Report(nullptr);
}

void flatten(const Report &value, const std::string &prefix,
             std::vector<std::pair<std::string, std::string>> &cells) {
    if (value.is_object()) {
        for (const auto &[k, v] : value.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, cells);
        }
    } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            flatten(value[i], prefix + "[" + std::to_string(i) + "]", cells);
        }
    } else if (value.is_null()) {
        cells.emplace_back(prefix, "");
    } else if (value.is_string()) {
        const auto s = value.get<std::string>();
        const bool quote = s.find_first_of(",\"\n") != std::string::npos;
        cells.emplace_back(prefix, quote ? value.dump() : s);
    } else {
        // same digits as the JSON rendering
        cells.emplace_back(prefix, value.dump());
    }
}

} // namespace

InitKind parse_init(const std::string &value) {
    if (value == "zero") return AllZeroInit{};
    if (value == "ghz") return GhzInit{};
    return CustomInit{io::amplitudes_from_json(io::read_json_file(value, "--init"))};
}

OutputFormat parse_format(const std::string &value) {
    if (value == "json") return OutputFormat::Json;
    if (value == "csv") return OutputFormat::Csv;
    throw InvalidInput("--format: expected csv or json, got '" + value + "'");
}

Direction parse_direction(const std::string &value) {
    if (value == "max") return Direction::Max;
    if (value == "min") return Direction::Min;
    throw InvalidInput("--direction: expected max or min, got '" + value + "'");
}

Report cmd_payoff(const RunConfig &cfg) {
    const GameSequence seq = GameSequence::parse(cfg.sequence);
    const CircuitPlan plan = compile(seq);
    const EpsilonBias eps(cfg.eps);
    const StateVector init = initial_state_for(plan, cfg.init);
    const double total = plan_payoff(plan, init, eps, cfg.phases, Normalization::Total);
    const auto norm = cfg.per_qubit ? Normalization::PerQubit : Normalization::Total;
    const PayoffExpansion exp =
        payoff_epsilon_expansion(seq, cfg.init, cfg.phases, 1e-4, norm);

    Report r;
    r["sequence"] = seq.str();
    r["init"] = init_name(cfg.init);
    r["qubits"] = plan.total_qubits;
    r["seed_qubits"] = plan.seed_count;
    r["eps"] = cfg.eps;
    r["per_qubit"] = cfg.per_qubit;
    r["payoff_total"] = out(total);
    r["payoff_per_qubit"] = out(per_qubit(total, plan.total_qubits));
    r["c0"] = out(exp.c0);
    r["c1"] = out(exp.c1);
    r["phases"] = phases_report(cfg.phases);
    return r;
}

RunConfig config_from_report(const Report &report) {
    RunConfig cfg;
    cfg.sequence = report.at("sequence").get<std::string>();
    const auto init = report.at("init").get<std::string>();
    if (init == "custom") {
        throw InvalidInput("report: custom initial states cannot be replayed");
    }
    cfg.init = parse_init(init);
    cfg.eps = report.at("eps").get<double>();
    cfg.per_qubit = report.at("per_qubit").get<bool>();
    cfg.phases = io::phases_from_json(nlohmann::json::parse(report.at("phases").dump()));
    return cfg;
}

Report cmd_table1(std::size_t repetitions) {
    if (repetitions == 0) {
        throw InvalidInput("--repetitions: must be positive");
    }
    Report rows = Report::array();
    for (const auto &row : reproduce_payoff_table(repetitions)) {
        Report r;
        r["sequence"] = row.label;
        r["simulated"] = row.sequence;
        r["classical_c0"] = out(row.classical.c0);
        r["classical_c1"] = out(row.classical.c1);
        r["quantum_c0"] = out(row.quantum.c0);
        r["quantum_c1"] = out(row.quantum.c1);
        const auto mn = expansion_json(row.quantum_min);
        const auto mx = expansion_json(row.quantum_max);
        r["quantum_min_c0"] = mn["c0"];
        r["quantum_min_c1"] = mn["c1"];
        r["quantum_max_c0"] = mx["c0"];
        r["quantum_max_c1"] = mx["c1"];
        rows.push_back(std::move(r));
    }
    return rows;
}

Report cmd_optimize(const RunConfig &cfg, Direction dir) {
    const GameSequence seq = GameSequence::parse(cfg.sequence);
    const CircuitPlan plan = compile(seq);
    const EpsilonBias eps(cfg.eps);
    const OptimizationResult res = optimize_phases(seq, cfg.init, eps, dir);
    // envelope slope: derivative at the optimal phases
    const PayoffExpansion exp =
        payoff_epsilon_expansion(seq, cfg.init, res.best_phases);

    Report r;
    r["sequence"] = seq.str();
    r["init"] = init_name(cfg.init);
    r["qubits"] = plan.total_qubits;
    r["eps"] = cfg.eps;
    r["direction"] = direction_name(dir);
    r["best_value"] = out(res.best_value);
    r["best_total"] = out(res.best_value * static_cast<double>(plan.total_qubits));
    r["c0"] = out(exp.c0);
    r["c1"] = out(exp.c1);
    r["flat"] = res.flat();
    r["converged"] = res.converged;
    r["sweeps"] = res.sweeps;
    r["evaluations"] = res.evaluations;
    r["best_phases"] = phases_report(res.best_phases);
    return r;
}

Report cmd_classical(const ClassicalConfig &cfg) {
    Report r;
    switch (cfg.mode) {
    case ClassicalMode::Sequence: {
        const GameSequence seq = GameSequence::parse(cfg.sequence);
        const SeedChoice seeds = parse_seeds(cfg.seeds);
        const EpsilonBias eps(cfg.eps);
        const auto [c0, c1] = first_order_expansion([&](EpsilonBias e) {
            return classical_sequence_payoff(seq, e, seeds);
        });
        r["mode"] = "sequence";
        r["sequence"] = seq.str();
        r["seeds"] = cfg.seeds;
        r["qubits"] = compile(seq).total_qubits;
        r["eps"] = cfg.eps;
        r["payoff_per_qubit"] = out(classical_sequence_payoff(seq, eps, seeds));
        r["c0"] = out(c0);
        r["c1"] = out(c1);
        break;
    }
    case ClassicalMode::Stationary: {
        const Policy policy = parse_policy(cfg.policy, cfg.mix_weight);
        const EpsilonBias eps(cfg.eps);
        const auto pi = stationary_distribution(
            build_history_chain(policy, ClassicalGameSpec::from_bias(eps)));
        r["mode"] = "stationary";
        r["policy"] = cfg.policy;
        r["a_weight"] = policy.a_weight;
        r["eps"] = cfg.eps;
        r["payoff_per_game"] = out(stationary_payoff(policy, eps));
        r["distribution"] = {out(pi[0]), out(pi[1]), out(pi[2]), out(pi[3])};
        break;
    }
    case ClassicalMode::Threshold: {
        r["mode"] = "threshold";
        if (!cfg.sequence.empty()) {
            const GameSequence seq = GameSequence::parse(cfg.sequence);
            const SeedChoice seeds = parse_seeds(cfg.seeds);
            r["sequence"] = seq.str();
            r["seeds"] = cfg.seeds;
            r["threshold"] = optional_number(sequence_threshold(seq, seeds));
            r["exact_root"] = optional_number(sequence_threshold_exact(seq, seeds));
        } else {
            const Policy policy = parse_policy(cfg.policy, cfg.mix_weight);
            r["policy"] = cfg.policy;
            r["a_weight"] = policy.a_weight;
            r["threshold"] = optional_number(stationary_threshold(policy));
        }
        break;
    }
    }
    return r;
}

std::string render(const Report &report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        return report.dump(2) + "\n";
    }
    std::vector<Report> rows;
    if (report.is_array()) {
        rows.assign(report.begin(), report.end());
    } else {
        rows.push_back(report);
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(rows[i], "", cells);
        if (i == 0) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                os << (c ? "," : "") << cells[c].first;
            }
            os << '\n';
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            os << (c ? "," : "") << cells[c].second;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace qparrondo::cli
