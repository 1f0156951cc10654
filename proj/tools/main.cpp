// Copyright 2026 The qmatops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qmatops/io.hpp"

namespace {

using qmatops::Command;
using qmatops::OutputFormat;
using qmatops::Parallelism;
using qmatops::RunConfig;
using qmatops::RunMode;

struct CliOptions {
    RunConfig config;
    std::string mode = "exact";
    long long shots = 0;
    std::uint64_t seed = qmatops::kDefaultSeed;
    double s_param = -1.0;
    std::string convention = "shared-control";
    std::string format = "text";
    std::string sizes;
    bool seen_s = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opts)
{
    cmd->add_option("--seed", opts.seed, "Seed for all shot sampling");
    cmd->add_option("--qubit-cap", opts.config.qubit_cap,
                    "Maximum simulated qubits (default 26)");
    cmd->add_option("--format", opts.format, "Report format: text or structured")
        ->check(CLI::IsMember({"text", "structured", "json"}));
}

void add_mode_flags(CLI::App* cmd, CliOptions& opts)
{
    cmd->add_option("--mode", opts.mode, "exact or shots")
        ->check(CLI::IsMember({"exact", "shots"}));
    cmd->add_option("--shots", opts.shots, "Shot count (required with --mode shots)");
}

std::vector<int> parse_sizes(const std::string& sizes)
{
    std::vector<int> out;
    std::string token;
    std::istringstream stream(sizes);
    while (std::getline(stream, token, ',')) {
        try {
            out.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--sizes", "cannot parse size '" + token + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"State-vector simulator and resource analyzer for ancilla-measurement "
                 "linear-algebra protocols"};
    app.require_subcommand(1);

    CliOptions opts;

    auto* inner = app.add_subcommand("inner", "Bilinear inner product of two vectors");
    auto* add = app.add_subcommand("add", "Matrix addition");
    auto* matmul = app.add_subcommand("matmul", "Matrix multiplication");
    auto* analyze = app.add_subcommand("analyze", "Depth/width/gate-count scaling report");
    auto* sample = app.add_subcommand("sample", "Seeded shot sampling of the success flag");
    auto* embed = app.add_subcommand("embed-add", "Recast addition as multiplication");

    for (CLI::App* cmd : {inner, add, matmul}) {
        cmd->add_option("inputs", opts.config.inputs, "Two operand files")
            ->expected(2)
            ->required();
        add_mode_flags(cmd, opts);
        add_common_flags(cmd, opts);
    }
    add->add_option("--s", opts.s_param, "Slack amplitude in (0,1); default 1/sqrt(2)");

    analyze->add_option("protocol", opts.config.protocol, "inner, add or matmul")
        ->required();
    analyze->add_option("--sizes", opts.sizes, "Comma-separated register widths in qubits")
        ->required();
    analyze->add_option("--convention", opts.convention, "shared-control or strict")
        ->check(CLI::IsMember({"shared-control", "strict"}));
    analyze->add_flag("--dump-circuit", opts.config.dump_circuit,
                      "Append circuit listings to the report");
    add_common_flags(analyze, opts);

    sample->add_option("protocol", opts.config.protocol, "inner, add or matmul")->required();
    sample->add_option("inputs", opts.config.inputs, "Two operand files")
        ->expected(2)
        ->required();
    sample->add_option("--shots", opts.shots, "Shot count")->required();
    sample->add_option("--s", opts.s_param, "Slack amplitude for the addition protocol");
    add_common_flags(sample, opts);

    embed->add_option("inputs", opts.config.inputs, "Two operand files")
        ->expected(2)
        ->required();
    embed->add_flag("--run", opts.config.run_embedded,
                    "Also execute the multiplication protocol on the embedded pair");
    add_mode_flags(embed, opts);
    add_common_flags(embed, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qmatops::kExitParseConfig;
    }

    RunConfig& config = opts.config;
    if (inner->parsed()) {
        config.command = Command::Inner;
    } else if (add->parsed()) {
        config.command = Command::Add;
    } else if (matmul->parsed()) {
        config.command = Command::Matmul;
    } else if (analyze->parsed()) {
        config.command = Command::Analyze;
    } else if (sample->parsed()) {
        config.command = Command::Sample;
        opts.mode = "shots";
    } else {
        config.command = Command::EmbedAdd;
    }

    config.mode = opts.mode == "shots" ? RunMode::with_shots(opts.shots, opts.seed)
                                       : RunMode::exact();
    if (opts.s_param >= 0.0) {
        config.s_param = opts.s_param;
    }
    config.convention = opts.convention == "strict" ? Parallelism::Strict
                                                    : Parallelism::SharedControl;
    config.format = (opts.format == "text") ? OutputFormat::Text : OutputFormat::Structured;
    if (!opts.sizes.empty()) {
        try {
            config.sizes = parse_sizes(opts.sizes);
        } catch (const CLI::Error&) {
            std::cerr << "error: cannot parse --sizes '" << opts.sizes << "'\n";
            return qmatops::kExitParseConfig;
        }
    }

    const qmatops::CommandOutcome outcome = qmatops::run_command(config);
    if (config.format == OutputFormat::Structured) {
        std::cout << outcome.report.dump(2) << '\n';
    } else {
        std::cout << outcome.text;
    }
    return outcome.exit_code;
}
