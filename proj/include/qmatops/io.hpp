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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qmatops/depth.hpp"
#include "qmatops/protocols.hpp"

namespace qmatops {

enum class Command { Inner, Add, Matmul, Analyze, Sample, EmbedAdd };
enum class OutputFormat { Text, Structured };

/// Exit codes shared by run_command and the CLI binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParseConfig = 2;
inline constexpr int kExitDimension = 3;
inline constexpr int kExitZeroOutcome = 4;
inline constexpr int kExitQubitCap = 5;

struct RunConfig {
    Command command = Command::Inner;
    std::vector<std::string> inputs; // operand file paths
    RunMode mode = RunMode::exact();
    std::optional<double> s_param; // addition only
    Parallelism convention = Parallelism::SharedControl;
    OutputFormat format = OutputFormat::Text;
    int qubit_cap = kDefaultQubitCap;
    std::vector<int> sizes;    // analyze
    std::string protocol;      // analyze/sample: "inner" | "add" | "matmul"
    bool run_embedded = false; // embed-add: also execute the product protocol
    bool dump_circuit = false; // analyze: append circuit listings
};

struct CommandOutcome {
    int exit_code = kExitOk;
    nlohmann::json report;
    std::string text;
};

/// Parses a matrix file. Two formats are supported:
///   * CSV of reals, one row per line;
///   * a JSON document {"rows": R, "cols": C, "data": [[re, im], ...]}
///     with row-major data (the only way to provide complex entries).
/// The format is detected from the first non-space character.
ComplexMatrix parse_matrix_file(const std::string& path);
ComplexMatrix parse_matrix_text(const std::string& content, const std::string& source);

/// Interprets a 1 x N or N x 1 matrix as a vector.
ComplexVector as_vector(const ComplexMatrix& m, const std::string& source);

/// Executes one command. Errors are folded into the exit code and an
/// "error" field of the report rather than thrown.
CommandOutcome run_command(const RunConfig& config);

std::string render_text_report(const nlohmann::json& report);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& source);

} // namespace qmatops
