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

#include "qmatops/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qmatops/oracle.hpp"

namespace qmatops {

namespace {

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& token, const std::string& where)
{
    const std::string t = trim(token);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || t.empty()) {
        throw ParseError(where + ": cannot parse real number from '" + token + "'");
    }
    return value;
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_complex(const Complex& c)
{
    if (c.imag() == 0.0) {
        return fmt(c.real());
    }
    return fmt(c.real()) + (c.imag() < 0 ? "-" : "+") + fmt(std::abs(c.imag())) + "i";
}

ComplexMatrix parse_csv_matrix(const std::string& content, const std::string& source)
{
    std::vector<std::vector<double>> rows;
    std::istringstream stream(content);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        std::vector<double> row;
        std::string cell;
        std::istringstream cells(line);
        int col_no = 0;
        while (std::getline(cells, cell, ',')) {
            ++col_no;
            row.push_back(parse_real(cell, source + ":" + std::to_string(line_no) +
                                               " column " + std::to_string(col_no)));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(source + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(rows.front().size()) + " values, got " +
                             std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(source + ": no matrix rows found");
    }
    ComplexMatrix m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (std::size_t l = 0; l < rows[j].size(); ++l) {
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) =
                Complex{rows[j][l], 0.0};
        }
    }
    return m;
}

} // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m)
{
    nlohmann::json data = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        for (Eigen::Index l = 0; l < m.cols(); ++l) {
            data.push_back({m(j, l).real(), m(j, l).imag()});
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& source)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        throw ParseError(source + ": structured matrix needs 'rows', 'cols' and 'data'");
    }
    const auto rows = j.at("rows").get<long long>();
    const auto cols = j.at("cols").get<long long>();
    if (rows < 1 || cols < 1) {
        throw ParseError(source + ": matrix dimensions must be positive");
    }
    const auto& data = j.at("data");
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols)) {
        throw ParseError(source + ": 'data' must hold rows*cols [re, im] pairs");
    }
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::size_t i = 0;
    for (const auto& entry : data) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ParseError(source + ": data entry " + std::to_string(i) +
                             " is not an [re, im] pair");
        }
        const auto idx = static_cast<Eigen::Index>(i);
        m(idx / static_cast<Eigen::Index>(cols), idx % static_cast<Eigen::Index>(cols)) =
            Complex{entry[0].get<double>(), entry[1].get<double>()};
        ++i;
    }
    return m;
}

ComplexMatrix parse_matrix_text(const std::string& content, const std::string& source)
{
    const std::string body = trim(content);
    if (body.empty()) {
        throw ParseError(source + ": empty matrix file");
    }
    if (body.front() == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(source + ": invalid JSON: " + e.what());
        }
        return matrix_from_json(doc, source);
    }
    return parse_csv_matrix(content, source);
}

ComplexMatrix parse_matrix_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file) {
        throw ParseError(path + ": cannot open file");
    }
    std::ostringstream content;
    content << file.rdbuf();
    return parse_matrix_text(content.str(), path);
}

ComplexVector as_vector(const ComplexMatrix& m, const std::string& source)
{
    if (m.cols() == 1) {
        return m.col(0);
    }
    if (m.rows() == 1) {
        return m.row(0).transpose();
    }
    throw DimensionError(source + ": expected a 1xN or Nx1 vector, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

namespace {

nlohmann::json scales_json(const ScaleInfo& s)
{
    return {{"c1", s.c1}, {"c2", s.c2}, {"s1", s.s1}, {"s2", s.s2}, {"coupling", s.coupling}};
}

nlohmann::json shot_json(const ShotRecord& r)
{
    return {{"shots", r.shots},
            {"successes", r.successes},
            {"estimated_p", r.estimated_p},
            {"std_error", r.std_error},
            {"seed", r.seed}};
}

const char* command_name(Command c)
{
    switch (c) {
    case Command::Inner:
        return "inner";
    case Command::Add:
        return "add";
    case Command::Matmul:
        return "matmul";
    case Command::Analyze:
        return "analyze";
    case Command::Sample:
        return "sample";
    case Command::EmbedAdd:
        return "embed-add";
    }
    return "?";
}

ProtocolKind protocol_from_name(const std::string& name)
{
    if (name == "inner") {
        return ProtocolKind::InnerProduct;
    }
    if (name == "add") {
        return ProtocolKind::Addition;
    }
    if (name == "matmul") {
        return ProtocolKind::Multiplication;
    }
    throw ConfigError("unknown protocol '" + name + "' (expected inner, add or matmul)");
}

void require_inputs(const RunConfig& config, std::size_t count)
{
    if (config.inputs.size() != count) {
        throw ConfigError(std::string(command_name(config.command)) + " needs exactly " +
                          std::to_string(count) + " input files");
    }
}

void validate_mode(const RunConfig& config)
{
    if (config.mode.kind == RunMode::Kind::Shots && config.mode.shots < 1) {
        throw ConfigError("shots mode requires a positive --shots count");
    }
    if (config.s_param &&
        !(config.command == Command::Add ||
          ((config.command == Command::Sample || config.command == Command::Analyze) &&
           config.protocol == "add") ||
          config.command == Command::EmbedAdd)) {
        throw ConfigError("--s only applies to the addition protocol");
    }
}

nlohmann::json protocol_result_json(const ProtocolResult& result, bool is_inner,
                                    const RunMode& mode)
{
    nlohmann::json j;
    j["success_probability"] = result.success_probability;
    j["zero_outcome"] = result.zero_outcome;
    j["g"] = result.g;
    j["g_squared"] = result.g * result.g;
    j["scales"] = scales_json(result.scales);
    if (mode.kind == RunMode::Kind::Exact || is_inner) {
        j["recovered"] = matrix_to_json(result.recovered);
    }
    if (is_inner) {
        j["phase"] = {result.phase.real(), result.phase.imag()};
        j["recovered_value"] = {result.recovered(0, 0).real(), result.recovered(0, 0).imag()};
    }
    if (result.shot_record) {
        j["shot_record"] = shot_json(*result.shot_record);
    }
    return j;
}

ProtocolResult dispatch_protocol(const std::string& protocol, const RunConfig& config)
{
    if (protocol == "inner") {
        const ComplexVector v1 =
            as_vector(parse_matrix_file(config.inputs[0]), config.inputs[0]);
        const ComplexVector v2 =
            as_vector(parse_matrix_file(config.inputs[1]), config.inputs[1]);
        return run_inner_product(v1, v2, config.mode, config.qubit_cap);
    }
    const ComplexMatrix a1 = parse_matrix_file(config.inputs[0]);
    const ComplexMatrix a2 = parse_matrix_file(config.inputs[1]);
    if (protocol == "add") {
        return run_addition(a1, a2, config.s_param.value_or(kDefaultSlackTarget), config.mode,
                            config.qubit_cap);
    }
    return run_multiplication(a1, a2, config.mode, config.qubit_cap);
}

nlohmann::json analyze_report(const RunConfig& config)
{
    if (config.sizes.empty()) {
        throw ConfigError("analyze needs --sizes");
    }
    const ProtocolKind kind = protocol_from_name(config.protocol);
    const auto rows = scaling_report(kind, config.sizes, config.convention);
    nlohmann::json j;
    j["command"] = "analyze";
    j["protocol"] = config.protocol;
    j["convention"] =
        config.convention == Parallelism::SharedControl ? "shared-control" : "strict";
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : rows) {
        table.push_back({{"size", row.size},
                         {"depth", row.depth},
                         {"toffoli_count", row.toffoli_count},
                         {"width", row.width}});
    }
    j["rows"] = std::move(table);
    if (config.dump_circuit) {
        nlohmann::json dumps = nlohmann::json::array();
        for (int size : config.sizes) {
            Circuit circuit = kind == ProtocolKind::InnerProduct
                                  ? build_inner_product_circuit(size)
                              : kind == ProtocolKind::Addition
                                  ? build_addition_circuit(size, size)
                                  : build_multiplication_circuit(size, size, size);
            dumps.push_back({{"size", size}, {"circuit", circuit_to_text(circuit)}});
        }
        j["circuits"] = std::move(dumps);
    }
    return j;
}

} // namespace

std::string render_text_report(const nlohmann::json& report)
{
    std::ostringstream out;
    if (report.contains("error")) {
        out << "error: " << report.at("error").get<std::string>() << '\n';
        return out.str();
    }
    const std::string command = report.value("command", "?");
    out << "command: " << command << '\n';

    auto print_matrix = [&out](const char* label, const nlohmann::json& mj) {
        const ComplexMatrix m = matrix_from_json(mj, "report");
        out << label << " (" << m.rows() << "x" << m.cols() << "):\n";
        for (Eigen::Index j = 0; j < m.rows(); ++j) {
            out << " ";
            for (Eigen::Index l = 0; l < m.cols(); ++l) {
                out << ' ' << fmt_complex(m(j, l));
            }
            out << '\n';
        }
    };
    auto print_shots = [&out](const nlohmann::json& s) {
        out << "shots: " << s.at("shots").get<long long>()
            << "  successes: " << s.at("successes").get<long long>()
            << "  estimated p: " << fmt(s.at("estimated_p").get<double>())
            << "  std error: " << fmt(s.at("std_error").get<double>())
            << "  seed: " << s.at("seed").get<std::uint64_t>() << '\n';
    };

    if (command == "analyze") {
        out << "protocol: " << report.at("protocol").get<std::string>() << '\n';
        out << "convention: " << report.at("convention").get<std::string>() << '\n';
        out << "size  depth  toffolis  width\n";
        for (const auto& row : report.at("rows")) {
            char line[80];
            std::snprintf(line, sizeof(line), "%4d  %5d  %8d  %5d\n",
                          row.at("size").get<int>(), row.at("depth").get<int>(),
                          row.at("toffoli_count").get<int>(), row.at("width").get<int>());
            out << line;
        }
        if (report.contains("circuits")) {
            for (const auto& dump : report.at("circuits")) {
                out << "circuit (size " << dump.at("size").get<int>() << "):\n"
                    << dump.at("circuit").get<std::string>();
            }
        }
        return out.str();
    }

    if (command == "embed-add") {
        print_matrix("embedded left factor", report.at("a1_embedded"));
        print_matrix("embedded right factor", report.at("a2_embedded"));
        print_matrix("product top-left block", report.at("product_top_left"));
        out << "matches direct sum: "
            << (report.at("matches_direct_sum").get<bool>() ? "yes" : "no") << '\n';
        if (report.contains("run")) {
            out << "protocol run:\n" << render_text_report(report.at("run"));
        }
        return out.str();
    }

    if (report.contains("mode")) {
        out << "mode: " << report.at("mode").get<std::string>() << '\n';
    }
    if (report.contains("exact_probability")) {
        out << "exact probability: " << fmt(report.at("exact_probability").get<double>())
            << '\n';
    }
    if (report.contains("success_probability")) {
        out << "success probability: " << fmt(report.at("success_probability").get<double>())
            << '\n';
    }
    if (report.contains("zero_outcome")) {
        out << "zero outcome: " << (report.at("zero_outcome").get<bool>() ? "yes" : "no")
            << '\n';
    }
    if (report.contains("g")) {
        out << "G: " << fmt(report.at("g").get<double>())
            << "  G^2: " << fmt(report.at("g_squared").get<double>()) << '\n';
    }
    if (report.contains("scales")) {
        const auto& s = report.at("scales");
        out << "scales: c1=" << fmt(s.at("c1").get<double>())
            << " c2=" << fmt(s.at("c2").get<double>()) << " s1=" << fmt(s.at("s1").get<double>())
            << " s2=" << fmt(s.at("s2").get<double>())
            << " coupling=" << fmt(s.at("coupling").get<double>()) << '\n';
    }
    if (report.contains("phase")) {
        const auto& p = report.at("phase");
        out << "phase: " << fmt_complex({p[0].get<double>(), p[1].get<double>()}) << '\n';
    }
    if (report.contains("recovered_value")) {
        const auto& r = report.at("recovered_value");
        out << "recovered value: " << fmt_complex({r[0].get<double>(), r[1].get<double>()})
            << '\n';
    }
    if (report.contains("recovered")) {
        print_matrix("recovered", report.at("recovered"));
    }
    if (report.contains("shot_record")) {
        print_shots(report.at("shot_record"));
    }
    if (report.contains("amplification")) {
        const auto& a = report.at("amplification");
        out << "amplification over " << a.at("trials").get<long long>()
            << " trials: " << fmt(a.at("probability").get<double>()) << '\n';
    }
    if (report.contains("required_trials_99")) {
        out << "trials for 99% success: " << report.at("required_trials_99").get<long long>()
            << '\n';
    }
    return out.str();
}

CommandOutcome run_command(const RunConfig& config)
{
    CommandOutcome outcome;
    auto& report = outcome.report;
    try {
        validate_mode(config);
        switch (config.command) {
        case Command::Inner:
        case Command::Add:
        case Command::Matmul: {
            require_inputs(config, 2);
            const std::string name = command_name(config.command);
            const ProtocolResult result = dispatch_protocol(name, config);
            report = protocol_result_json(result, config.command == Command::Inner,
                                          config.mode);
            report["command"] = name;
            report["mode"] = config.mode.kind == RunMode::Kind::Exact ? "exact" : "shots";
            report["inputs"] = config.inputs;
            if (config.command == Command::Add) {
                report["s_param"] = config.s_param.value_or(kDefaultSlackTarget);
            }
            if (result.zero_outcome) {
                outcome.exit_code = kExitZeroOutcome;
            }
            break;
        }
        case Command::Sample: {
            require_inputs(config, 2);
            if (config.mode.kind != RunMode::Kind::Shots) {
                throw ConfigError("sample requires --shots");
            }
            protocol_from_name(config.protocol); // validates the name
            const ProtocolResult result = dispatch_protocol(config.protocol, config);
            report["command"] = "sample";
            report["protocol"] = config.protocol;
            report["inputs"] = config.inputs;
            report["exact_probability"] = result.success_probability;
            report["zero_outcome"] = result.zero_outcome;
            if (result.shot_record) {
                report["shot_record"] = shot_json(*result.shot_record);
            }
            const double p = result.success_probability;
            report["amplification"] = {
                {"trials", config.mode.shots},
                {"probability", amplification_probability(p, config.mode.shots)}};
            if (p > 0.0) {
                report["required_trials_99"] = required_trials(p, 0.99);
            }
            if (result.zero_outcome) {
                outcome.exit_code = kExitZeroOutcome;
            }
            break;
        }
        case Command::Analyze:
            report = analyze_report(config);
            break;
        case Command::EmbedAdd: {
            require_inputs(config, 2);
            const ComplexMatrix a1 = parse_matrix_file(config.inputs[0]);
            const ComplexMatrix a2 = parse_matrix_file(config.inputs[1]);
            const auto [left, right] = embed_addition_as_multiplication(a1, a2);
            const ComplexMatrix product = oracle_matmul(left, right);
            const ComplexMatrix block = product.topLeftCorner(a1.rows(), a1.cols());
            report["command"] = "embed-add";
            report["inputs"] = config.inputs;
            report["a1_embedded"] = matrix_to_json(left);
            report["a2_embedded"] = matrix_to_json(right);
            report["product_top_left"] = matrix_to_json(block);
            report["matches_direct_sum"] = block == oracle_add(a1, a2);
            if (config.run_embedded) {
                const ProtocolResult result =
                    run_multiplication(left, right, config.mode, config.qubit_cap);
                nlohmann::json run = protocol_result_json(result, false, config.mode);
                run["command"] = "matmul";
                run["mode"] =
                    config.mode.kind == RunMode::Kind::Exact ? "exact" : "shots";
                report["run"] = std::move(run);
                if (result.zero_outcome) {
                    outcome.exit_code = kExitZeroOutcome;
                }
            }
            break;
        }
        }
    } catch (const ParseError& e) {
        report["error"] = e.what();
        outcome.exit_code = kExitParseConfig;
    } catch (const ConfigError& e) {
        report["error"] = e.what();
        outcome.exit_code = kExitParseConfig;
    } catch (const LayoutError& e) {
        report["error"] = e.what();
        outcome.exit_code = kExitParseConfig;
    } catch (const DimensionError& e) {
        report["error"] = e.what();
        outcome.exit_code = kExitDimension;
    } catch (const QubitCapError& e) {
        report["error"] = e.what();
        outcome.exit_code = kExitQubitCap;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        outcome.exit_code = kExitInternal;
    }
    outcome.text = render_text_report(outcome.report);
    return outcome;
}

} // namespace qmatops
