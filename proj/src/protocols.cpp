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

#include "qmatops/protocols.hpp"

#include <cmath>

namespace qmatops {

namespace {

void require_positive(int value, const char* what)
{
    if (value < 1) {
        throw DimensionError(std::string(what) + " must be at least 1");
    }
}

// Register width needed to hold `extent` basis values (at least one qubit).
int register_width(std::size_t extent)
{
    const std::size_t padded = next_power_of_two(std::max<std::size_t>(extent, 2));
    return log2_exact(padded);
}

ComplexMatrix pad_to(const ComplexMatrix& m, Eigen::Index rows, Eigen::Index cols)
{
    ComplexMatrix padded = ComplexMatrix::Zero(rows, cols);
    padded.topLeftCorner(m.rows(), m.cols()) = m;
    return padded;
}

// Exact 2^(3k/2); 3k stays well below the double mantissa for any capped run.
double interference_factor(int k)
{
    return std::sqrt(static_cast<double>(std::uint64_t{1} << (3 * k)));
}

void append_agreement_marks(Circuit& circuit, const RegisterLayout& layout,
                            const std::string& left, const std::string& right,
                            const std::string& ancilla, int width)
{
    // For each qubit pair: flip the ancilla bit when both read 1, and again
    // when both read 0, so the ancilla ends at |1...1> exactly on the
    // agreement subspace.
    for (int j = 0; j < width; ++j) {
        const int lq = layout.qubit(left, j);
        const int rq = layout.qubit(right, j);
        const int aq = layout.qubit(ancilla, j);
        circuit.append(proj_controlled({{lq, 1}, {rq, 1}}, XPayload{{aq}}));
        circuit.append(proj_controlled({{lq, 0}, {rq, 0}}, XPayload{{aq}}));
    }
}

std::vector<QubitControl> register_controls(const RegisterLayout& layout,
                                            const std::string& name, int value)
{
    std::vector<QubitControl> controls;
    const int w = layout.width(name);
    for (int j = 0; j < w; ++j) {
        controls.push_back({layout.qubit(name, j), value});
    }
    return controls;
}

void append_hadamard_register(Circuit& circuit, const RegisterLayout& layout,
                              const std::string& name)
{
    const int w = layout.width(name);
    for (int j = 0; j < w; ++j) {
        circuit.append(h_gate(layout.qubit(name, j)));
    }
}

struct PipelineRun {
    StateVector final_state;
    Projection projection;
};

PipelineRun execute(const Circuit& circuit, const StateVector& initial)
{
    PipelineRun run{apply_circuit(initial, circuit), {}};
    run.projection = project_and_extract(run.final_state, {{"B2", 1}});
    return run;
}

void attach_shots(ProtocolResult& result, const StateVector& final_state, const RunMode& mode)
{
    if (mode.kind == RunMode::Kind::Shots) {
        result.shot_record = sample_measurement(final_state, "B2", mode.shots, mode.seed);
    }
}

} // namespace

Circuit build_inner_product_circuit(int n)
{
    require_positive(n, "qubit count n");
    RegisterLayout layout = RegisterLayout::make(
        {{"S1", n}, {"S2", n}, {"A", n}, {"B1", 1}, {"B2", 1}});
    Circuit circuit(layout);

    circuit.begin_stage("w1");
    append_agreement_marks(circuit, layout, "S1", "S2", "A", n);

    circuit.begin_stage("w2");
    circuit.append(proj_controlled(register_controls(layout, "A", 1),
                                   XPayload{{layout.qubit("B1", 0)}}));

    circuit.begin_stage("w3");
    append_hadamard_register(circuit, layout, "S1");
    append_hadamard_register(circuit, layout, "S2");
    append_hadamard_register(circuit, layout, "A");

    circuit.begin_stage("w4");
    std::vector<QubitControl> controls = register_controls(layout, "S1", 0);
    for (const auto& c : register_controls(layout, "S2", 0)) {
        controls.push_back(c);
    }
    for (const auto& c : register_controls(layout, "A", 0)) {
        controls.push_back(c);
    }
    controls.push_back({layout.qubit("B1", 0), 1});
    circuit.append(proj_controlled(std::move(controls), XPayload{{layout.qubit("B2", 0)}}));
    return circuit;
}

Circuit build_addition_circuit(int n, int m)
{
    require_positive(n, "row qubit count n");
    require_positive(m, "column qubit count m");
    RegisterLayout layout = RegisterLayout::make({{"R1", n},
                                                  {"C1", m},
                                                  {"D1", 1},
                                                  {"R2", n},
                                                  {"C2", m},
                                                  {"D2", 1},
                                                  {"B1", 1},
                                                  {"B2", 1}});
    Circuit circuit(layout);
    const int d1 = layout.qubit("D1", 0);
    const int d2 = layout.qubit("D2", 0);
    const int b1 = layout.qubit("B1", 0);
    const int b2 = layout.qubit("B2", 0);

    // Mark the two cross terms (one operand's data against the other's
    // slack); the data/data and slack/slack terms stay unflagged garbage.
    circuit.begin_stage("w1");
    circuit.append(proj_controlled({{d1, 1}, {d2, 0}}, XPayload{{b1}}));
    circuit.append(proj_controlled({{d1, 0}, {d2, 1}}, XPayload{{b1}}));

    // Fold the second operand's data onto the first register pair. All
    // swaps hang off the single control D1.
    circuit.begin_stage("w2");
    SwapPayload swaps;
    for (int j = 0; j < n; ++j) {
        swaps.pairs.emplace_back(layout.qubit("R1", j), layout.qubit("R2", j));
    }
    for (int j = 0; j < m; ++j) {
        swaps.pairs.emplace_back(layout.qubit("C1", j), layout.qubit("C2", j));
    }
    circuit.append(proj_controlled({{d1, 1}}, std::move(swaps)));

    circuit.begin_stage("w3");
    circuit.append(h_gate(d1));
    circuit.append(h_gate(d2));

    circuit.begin_stage("w4");
    circuit.append(proj_controlled({{d1, 0}, {d2, 0}, {b1, 1}}, XPayload{{b2}}));
    return circuit;
}

Circuit build_multiplication_circuit(int n, int k, int m)
{
    require_positive(n, "row qubit count n");
    require_positive(k, "inner qubit count k");
    require_positive(m, "column qubit count m");
    RegisterLayout layout = RegisterLayout::make(
        {{"R1", n}, {"C1", k}, {"R2", k}, {"C2", m}, {"A", k}, {"B1", 1}, {"B2", 1}});
    Circuit circuit(layout);

    circuit.begin_stage("w1");
    append_agreement_marks(circuit, layout, "C1", "R2", "A", k);

    circuit.begin_stage("w2");
    circuit.append(proj_controlled(register_controls(layout, "A", 1),
                                   XPayload{{layout.qubit("B1", 0)}}));

    circuit.begin_stage("w3");
    append_hadamard_register(circuit, layout, "C1");
    append_hadamard_register(circuit, layout, "R2");
    append_hadamard_register(circuit, layout, "A");

    circuit.begin_stage("w4");
    std::vector<QubitControl> controls = register_controls(layout, "C1", 0);
    for (const auto& c : register_controls(layout, "R2", 0)) {
        controls.push_back(c);
    }
    for (const auto& c : register_controls(layout, "A", 0)) {
        controls.push_back(c);
    }
    controls.push_back({layout.qubit("B1", 0), 1});
    circuit.append(proj_controlled(std::move(controls), XPayload{{layout.qubit("B2", 0)}}));
    return circuit;
}

StateVector inner_product_initial_state(const EncodedOperand& v1, const EncodedOperand& v2,
                                        int qubit_cap)
{
    const StateVector psi1 = operand_state(v1, qubit_cap);
    const StateVector psi2 = operand_state(v2, qubit_cap);
    const int n = psi1.layout().width(v1.row_register);
    const StateVector ancillas = StateVector::zero_state(
        RegisterLayout::make({{"A", n}, {"B1", 1}, {"B2", 1}}), qubit_cap);
    return tensor(tensor(psi1, psi2), ancillas);
}

StateVector addition_initial_state(const EncodedOperand& a1, const EncodedOperand& a2,
                                   int qubit_cap)
{
    const StateVector psi1 = operand_state(a1, qubit_cap);
    const StateVector psi2 = operand_state(a2, qubit_cap);
    const StateVector flags =
        StateVector::zero_state(RegisterLayout::make({{"B1", 1}, {"B2", 1}}), qubit_cap);
    return tensor(tensor(psi1, psi2), flags);
}

StateVector multiplication_initial_state(const EncodedOperand& a1, const EncodedOperand& a2,
                                         int qubit_cap)
{
    const StateVector psi1 = operand_state(a1, qubit_cap);
    const StateVector psi2 = operand_state(a2, qubit_cap);
    const int k = psi1.layout().width(a1.col_register);
    const StateVector ancillas = StateVector::zero_state(
        RegisterLayout::make({{"A", k}, {"B1", 1}, {"B2", 1}}), qubit_cap);
    return tensor(tensor(psi1, psi2), ancillas);
}

ProtocolResult run_inner_product(const ComplexVector& v1, const ComplexVector& v2,
                                 const RunMode& mode, int qubit_cap)
{
    if (v1.size() != v2.size()) {
        throw DimensionError("inner product needs vectors of equal length");
    }
    if (v1.size() == 0) {
        throw DimensionError("inner product needs non-empty vectors");
    }
    const int n = register_width(static_cast<std::size_t>(v1.size()));
    const Eigen::Index dim = Eigen::Index{1} << n;

    EncodedOperand e1 = encode_vector(v1, "S1");
    EncodedOperand e2 = encode_vector(v2, "S2");
    e1.padded = pad_to(e1.padded, dim, 1);
    e2.padded = pad_to(e2.padded, dim, 1);

    const Circuit circuit = build_inner_product_circuit(n);
    const StateVector phi0 = inner_product_initial_state(e1, e2, qubit_cap);
    const PipelineRun run = execute(circuit, phi0);

    ProtocolResult result;
    result.success_probability = run.projection.probability;
    result.post_state = run.projection.conditional;
    result.scales = {e1.scale, e2.scale, 0.0, 0.0, e1.scale * e2.scale};

    const Complex flagged = run.final_state.amplitude(
        {{"S1", 0}, {"S2", 0}, {"A", 0}, {"B1", 1}, {"B2", 1}});
    const Complex scaled_sum = flagged * interference_factor(n);
    result.g = std::abs(scaled_sum);

    result.recovered = ComplexMatrix::Zero(1, 1);
    if (run.projection.probability <= kZeroOutcomeProbability) {
        result.zero_outcome = true;
    } else if (mode.kind == RunMode::Kind::Exact) {
        result.phase = scaled_sum / std::abs(scaled_sum);
        result.recovered(0, 0) = scaled_sum / result.scales.coupling;
    }
    attach_shots(result, run.final_state, mode);
    if (mode.kind == RunMode::Kind::Shots && !result.zero_outcome) {
        // Only the magnitude is observable from the shot frequency.
        const double est = result.shot_record->estimated_p;
        result.recovered(0, 0) =
            std::sqrt(est) * interference_factor(n) / result.scales.coupling;
    }
    return result;
}

ProtocolResult run_inner_product_hermitian(const ComplexVector& v1, const ComplexVector& v2,
                                           const RunMode& mode, int qubit_cap)
{
    return run_inner_product(v1, v2.conjugate(), mode, qubit_cap);
}

namespace {

struct AdditionScales {
    double c1, c2, s1, s2;
};

// Picks per-operand scales with c1*s2 = c2*s1 so both branches carry the
// same weight and the recovered sum is unweighted. `slack` fixes the
// slack amplitude of the operand that constrains the calibration.
AdditionScales calibrate_addition(double norm1, double norm2, double slack)
{
    const double data_weight = std::sqrt(1.0 - slack * slack);
    if (norm1 == 0.0 && norm2 == 0.0) {
        return {1.0, 1.0, 1.0, 1.0};
    }
    if (norm2 == 0.0) {
        const double c1 = data_weight / norm1;
        return {c1, c1 / slack, slack, 1.0};
    }
    if (norm1 == 0.0) {
        const double c2 = data_weight / norm2;
        return {c2 / slack, c2, 1.0, slack};
    }
    const double c2 = data_weight / norm2;
    const double denom = 1.0 - c2 * c2 * (norm2 * norm2 - norm1 * norm1);
    const double c1 = c2 / std::sqrt(denom);
    const double s1 = std::sqrt(1.0 - c1 * c1 * norm1 * norm1);
    return {c1, c2, s1, slack};
}

ProtocolResult run_addition_impl(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                 const AdditionScales& scales, bool unweight,
                                 const RunMode& mode, int qubit_cap)
{
    const int n = register_width(static_cast<std::size_t>(a1.rows()));
    const int m = register_width(static_cast<std::size_t>(a1.cols()));
    const Eigen::Index rows = Eigen::Index{1} << n;
    const Eigen::Index cols = Eigen::Index{1} << m;

    EncodedOperand e1 =
        encode_matrix_with_slack(pad_to(a1, rows, cols), scales.c1, "R1", "C1", "D1");
    EncodedOperand e2 =
        encode_matrix_with_slack(pad_to(a2, rows, cols), scales.c2, "R2", "C2", "D2");

    const Circuit circuit = build_addition_circuit(n, m);
    const StateVector phi0 = addition_initial_state(e1, e2, qubit_cap);
    const PipelineRun run = execute(circuit, phi0);

    const double coupling = unweight ? e1.scale * e2.slack : 1.0;

    ProtocolResult result;
    result.success_probability = run.projection.probability;
    result.post_state = run.projection.conditional;
    result.scales = {e1.scale, e2.scale, e1.slack, e2.slack, coupling};
    const double slack_geo = std::sqrt(e1.slack * e2.slack);
    result.g = slack_geo > 0.0
                   ? 2.0 * std::sqrt(run.projection.probability) / slack_geo
                   : 0.0;

    result.recovered = ComplexMatrix::Zero(a1.rows(), a1.cols());
    if (run.projection.probability <= kZeroOutcomeProbability) {
        result.zero_outcome = true;
    } else if (mode.kind == RunMode::Kind::Exact) {
        for (Eigen::Index j = 0; j < a1.rows(); ++j) {
            for (Eigen::Index l = 0; l < a1.cols(); ++l) {
                const Complex amp = run.final_state.amplitude(
                    {{"R1", static_cast<std::uint64_t>(j)},
                     {"C1", static_cast<std::uint64_t>(l)},
                     {"D1", 0},
                     {"R2", 0},
                     {"C2", 0},
                     {"D2", 0},
                     {"B1", 1},
                     {"B2", 1}});
                result.recovered(j, l) = amp * 2.0 / coupling;
            }
        }
    }
    attach_shots(result, run.final_state, mode);
    return result;
}

} // namespace

ProtocolResult run_addition(const ComplexMatrix& a1, const ComplexMatrix& a2,
                            double slack_target, const RunMode& mode, int qubit_cap)
{
    if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) {
        throw DimensionError("matrix addition needs equal dimensions");
    }
    if (a1.size() == 0) {
        throw DimensionError("matrix addition needs non-empty matrices");
    }
    if (!(slack_target > 0.0 && slack_target < 1.0)) {
        throw ConfigError("slack parameter must lie strictly between 0 and 1");
    }
    const AdditionScales scales = calibrate_addition(a1.norm(), a2.norm(), slack_target);
    return run_addition_impl(a1, a2, scales, /*unweight=*/true, mode, qubit_cap);
}

ProtocolResult run_addition_weighted(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                     double c1, double c2, const RunMode& mode, int qubit_cap)
{
    if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) {
        throw DimensionError("matrix addition needs equal dimensions");
    }
    if (a1.size() == 0) {
        throw DimensionError("matrix addition needs non-empty matrices");
    }
    const double s1_sq = 1.0 - c1 * c1 * a1.squaredNorm();
    const double s2_sq = 1.0 - c2 * c2 * a2.squaredNorm();
    if (c1 <= 0.0 || c2 <= 0.0 || s1_sq <= 0.0 || s2_sq <= 0.0) {
        throw ConfigError("weighted addition scales must satisfy c_i^2 |A_i|^2 < 1");
    }
    const AdditionScales scales{c1, c2, std::sqrt(s1_sq), std::sqrt(s2_sq)};
    return run_addition_impl(a1, a2, scales, /*unweight=*/false, mode, qubit_cap);
}

ProtocolResult run_multiplication(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                  const RunMode& mode, int qubit_cap)
{
    if (a1.cols() != a2.rows()) {
        throw DimensionError("matrix product needs matching inner dimensions");
    }
    if (a1.size() == 0 || a2.size() == 0) {
        throw DimensionError("matrix product needs non-empty matrices");
    }
    const int n = register_width(static_cast<std::size_t>(a1.rows()));
    const int k = register_width(static_cast<std::size_t>(a1.cols()));
    const int m = register_width(static_cast<std::size_t>(a2.cols()));

    EncodedOperand e1 = encode_matrix(a1, "R1", "C1");
    EncodedOperand e2 = encode_matrix(a2, "R2", "C2");
    e1.padded = pad_to(e1.padded, Eigen::Index{1} << n, Eigen::Index{1} << k);
    e2.padded = pad_to(e2.padded, Eigen::Index{1} << k, Eigen::Index{1} << m);

    const Circuit circuit = build_multiplication_circuit(n, k, m);
    const StateVector phi0 = multiplication_initial_state(e1, e2, qubit_cap);
    const PipelineRun run = execute(circuit, phi0);

    ProtocolResult result;
    result.success_probability = run.projection.probability;
    result.post_state = run.projection.conditional;
    result.scales = {e1.scale, e2.scale, 0.0, 0.0, e1.scale * e2.scale};
    const double factor = interference_factor(k);
    result.g = std::sqrt(run.projection.probability) * factor;

    result.recovered = ComplexMatrix::Zero(a1.rows(), a2.cols());
    if (run.projection.probability <= kZeroOutcomeProbability) {
        result.zero_outcome = true;
    } else if (mode.kind == RunMode::Kind::Exact) {
        for (Eigen::Index j = 0; j < a1.rows(); ++j) {
            for (Eigen::Index l = 0; l < a2.cols(); ++l) {
                const Complex amp =
                    run.final_state.amplitude({{"R1", static_cast<std::uint64_t>(j)},
                                               {"C1", 0},
                                               {"R2", 0},
                                               {"C2", static_cast<std::uint64_t>(l)},
                                               {"A", 0},
                                               {"B1", 1},
                                               {"B2", 1}});
                result.recovered(j, l) = amp * factor / result.scales.coupling;
            }
        }
    }
    attach_shots(result, run.final_state, mode);
    return result;
}

std::pair<ComplexMatrix, ComplexMatrix>
embed_addition_as_multiplication(const ComplexMatrix& a1, const ComplexMatrix& a2)
{
    if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) {
        throw DimensionError("block embedding needs equal dimensions");
    }
    const Eigen::Index n = a1.rows();
    const Eigen::Index m = a1.cols();

    ComplexMatrix left = ComplexMatrix::Zero(2 * n, m + n);
    left.topLeftCorner(n, m) = a1;
    left.block(0, m, n, n) = ComplexMatrix::Identity(n, n);

    ComplexMatrix right = ComplexMatrix::Zero(m + n, 2 * m);
    right.topLeftCorner(m, m) = ComplexMatrix::Identity(m, m);
    right.block(m, 0, n, m) = a2;

    return {std::move(left), std::move(right)};
}

StateVector inspect_stage(const Circuit& circuit, int stage, const StateVector& initial)
{
    const auto stages = circuit.stages();
    if (stage < 0 || stage > static_cast<int>(stages.size()) + 1) {
        throw ProtocolError("stage " + std::to_string(stage) + " out of range");
    }
    if (stage == 0) {
        return apply_prefix(initial, circuit, 0);
    }
    if (stage <= static_cast<int>(stages.size())) {
        return apply_prefix(initial, circuit, stages[static_cast<std::size_t>(stage - 1)].end);
    }
    const StateVector final_state = apply_circuit(initial, circuit);
    Projection projection = project_and_extract(final_state, {{"B2", 1}});
    if (!projection.conditional) {
        throw ProtocolError("post-selection has probability zero; no stage-5 state exists");
    }
    return *std::move(projection.conditional);
}

} // namespace qmatops
