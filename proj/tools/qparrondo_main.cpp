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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cli_commands.hpp"
#include "qparrondo/io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 1;

using namespace qparrondo;

struct CommonOptions {
    std::string sequence;
    std::string init = "ghz";
    double eps = 0.0;
    std::string phases_file;
    std::string format = "json";
    std::string out;
    bool per_qubit = true;
};

void add_run_options(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("--sequence", o.sequence, "Game sequence over {A, B}, e.g. AAB")
        ->required();
    cmd->add_option("--init", o.init,
                    "Initial state: zero, ghz, or a JSON file of [re, im] pairs")
        ->capture_default_str();
    cmd->add_option("--eps", o.eps, "Bias epsilon")->capture_default_str();
    cmd->add_option("--phases", o.phases_file, "JSON phase-assignment file");
}

void add_output_options(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("--format", o.format, "Output format: json or csv")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "Write output to this path instead of stdout");
}

cli::RunConfig to_config(const CommonOptions &o) {
    cli::RunConfig cfg;
    cfg.sequence = o.sequence;
    cfg.init = cli::parse_init(o.init);
    cfg.eps = o.eps;
    cfg.per_qubit = o.per_qubit;
    cfg.format = cli::parse_format(o.format);
    if (!o.phases_file.empty()) {
        cfg.phases = io::phases_from_json(io::read_json_file(o.phases_file, "--phases"));
    }
    return cfg;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!(f << text)) {
        throw std::ios_base::failure("cannot write '" + path + "'");
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum and classical history-dependent Parrondo games"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::size_t repetitions = 4;
    std::string direction = "max";
    cli::ClassicalConfig classical;
    std::string classical_mode;

    auto *payoff = app.add_subcommand("payoff", "Payoff expectation of a sequence");
    add_run_options(payoff, opts);
    add_output_options(payoff, opts);
    payoff->add_flag("--per-qubit,!--total", opts.per_qubit,
                     "Report c0/c1 per qubit (default) or as totals");

    auto *table = app.add_subcommand("table1", "Reproduce the per-qubit payoff table");
    table->add_option("--repetitions", repetitions,
                      "Copies used for the repeated rows (AA...A, AAB...AAB)")
        ->capture_default_str();
    add_output_options(table, opts);

    auto *optimize = app.add_subcommand("optimize", "Extremize the payoff over phases");
    add_run_options(optimize, opts);
    add_output_options(optimize, opts);
    optimize->add_option("--direction", direction, "max or min")->capture_default_str();

    auto *cls = app.add_subcommand("classical", "Classical oracle");
    cls->add_option("mode", classical_mode, "sequence, stationary or threshold")
        ->required()
        ->check(CLI::IsMember({"sequence", "stationary", "threshold"}));
    cls->add_option("--sequence", classical.sequence, "Game sequence");
    cls->add_option("--policy", classical.policy, "A, B or mix");
    cls->add_option("--mix", classical.mix_weight, "Weight of game A in mix")
        ->capture_default_str();
    cls->add_option("--eps", classical.eps, "Bias epsilon")->capture_default_str();
    cls->add_option("--seeds", classical.seeds, "uniform, LL, LW, WL or WW")
        ->capture_default_str();
    add_output_options(cls, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        cli::Report report;
        if (payoff->parsed()) {
            report = cli::cmd_payoff(to_config(opts));
        } else if (table->parsed()) {
            report = cli::cmd_table1(repetitions);
        } else if (optimize->parsed()) {
            report = cli::cmd_optimize(to_config(opts), cli::parse_direction(direction));
        } else {
            if (classical_mode == "sequence") {
                classical.mode = cli::ClassicalMode::Sequence;
            } else if (classical_mode == "stationary") {
                classical.mode = cli::ClassicalMode::Stationary;
            } else {
                classical.mode = cli::ClassicalMode::Threshold;
            }
            if (classical.mode != cli::ClassicalMode::Stationary &&
                classical.sequence.empty() && classical.policy.empty()) {
                throw InvalidInput("classical " + classical_mode +
                                   ": --sequence or --policy is required");
            }
            if (classical.mode == cli::ClassicalMode::Stationary &&
                classical.policy.empty()) {
                throw InvalidInput("classical stationary: --policy is required");
            }
            if (classical.mode == cli::ClassicalMode::Sequence &&
                classical.sequence.empty()) {
                throw InvalidInput("classical sequence: --sequence is required");
            }
        }
        if (cls->parsed()) {
            report = cli::cmd_classical(classical);
        }
        emit(cli::render(report, cli::parse_format(opts.format)), opts.out);
    } catch (const InvalidInput &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
