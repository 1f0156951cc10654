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

#include "qmatops/encoding.hpp"

#include <cmath>

namespace qmatops {

std::size_t next_power_of_two(std::size_t n)
{
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

int log2_exact(std::size_t n)
{
    int bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    if ((std::size_t{1} << bits) != n) {
        throw DimensionError("dimension " + std::to_string(n) + " is not a power of two");
    }
    return bits;
}

ComplexMatrix pad_to_power_of_two(const ComplexMatrix& m)
{
    const auto rows = next_power_of_two(static_cast<std::size_t>(m.rows()));
    const auto cols = next_power_of_two(static_cast<std::size_t>(m.cols()));
    if (static_cast<std::size_t>(m.rows()) == rows &&
        static_cast<std::size_t>(m.cols()) == cols) {
        return m;
    }
    ComplexMatrix padded = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows),
                                               static_cast<Eigen::Index>(cols));
    padded.topLeftCorner(m.rows(), m.cols()) = m;
    return padded;
}

EncodedOperand encode_vector(const ComplexVector& v, const std::string& reg)
{
    if (v.size() == 0) {
        throw DimensionError("cannot encode an empty vector");
    }
    const double norm = v.norm();
    if (norm == 0.0) {
        throw DimensionError("cannot encode the zero vector");
    }
    EncodedOperand op;
    op.raw = v;
    op.padded = pad_to_power_of_two(op.raw);
    op.scale = 1.0 / norm;
    op.row_register = reg;
    return op;
}

EncodedOperand encode_matrix(const ComplexMatrix& m, const std::string& row_reg,
                             const std::string& col_reg)
{
    if (m.size() == 0) {
        throw DimensionError("cannot encode an empty matrix");
    }
    const double norm = m.norm();
    if (norm == 0.0) {
        throw DimensionError("cannot encode the zero matrix");
    }
    EncodedOperand op;
    op.raw = m;
    op.padded = pad_to_power_of_two(m);
    op.scale = 1.0 / norm;
    op.row_register = row_reg;
    op.col_register = col_reg;
    return op;
}

EncodedOperand encode_matrix_with_slack(const ComplexMatrix& m, double c,
                                        const std::string& row_reg,
                                        const std::string& col_reg,
                                        const std::string& slack_reg)
{
    if (m.size() == 0) {
        throw DimensionError("cannot encode an empty matrix");
    }
    if (c <= 0.0) {
        throw DimensionError("encoding scale must be positive");
    }
    const double norm = m.norm();
    const double weight = c * c * norm * norm;
    if (weight >= 1.0) {
        throw DimensionError("scale too large: c^2 |M|_F^2 must stay below 1");
    }
    EncodedOperand op;
    op.raw = m;
    op.padded = pad_to_power_of_two(m);
    op.scale = c;
    op.slack = std::sqrt(1.0 - weight);
    op.row_register = row_reg;
    op.col_register = col_reg;
    op.slack_register = slack_reg;
    return op;
}

StateVector operand_state(const EncodedOperand& operand, int qubit_cap)
{
    const int n = log2_exact(static_cast<std::size_t>(operand.padded.rows()));
    const int m = operand.col_register.empty()
                      ? 0
                      : log2_exact(static_cast<std::size_t>(operand.padded.cols()));
    if (operand.col_register.empty() && operand.padded.cols() != 1) {
        throw DimensionError("vector operand must have a single column");
    }

    std::vector<RegisterSpec> regs{{operand.row_register, std::max(n, 1)}};
    if (!operand.col_register.empty()) {
        regs.push_back({operand.col_register, std::max(m, 1)});
    }
    if (!operand.slack_register.empty()) {
        regs.push_back({operand.slack_register, 1});
    }
    RegisterLayout layout = RegisterLayout::make(std::move(regs));
    detail::check_qubit_cap(layout.total_qubits(), qubit_cap);

    ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(layout.dimension()));
    const bool slack = !operand.slack_register.empty();
    for (Eigen::Index j = 0; j < operand.padded.rows(); ++j) {
        for (Eigen::Index l = 0; l < operand.padded.cols(); ++l) {
            BasisAssignment a{{operand.row_register, static_cast<std::uint64_t>(j)}};
            if (!operand.col_register.empty()) {
                a[operand.col_register] = static_cast<std::uint64_t>(l);
            }
            if (slack) {
                a[operand.slack_register] = 0;
            }
            amps[static_cast<Eigen::Index>(basis_index(layout, a))] =
                operand.scale * operand.padded(j, l);
        }
    }
    if (slack) {
        BasisAssignment a{{operand.row_register, 0}, {operand.slack_register, 1}};
        if (!operand.col_register.empty()) {
            a[operand.col_register] = 0;
        }
        amps[static_cast<Eigen::Index>(basis_index(layout, a))] = operand.slack;
    }

    StateVector state = StateVector::from_amplitudes(std::move(layout), std::move(amps),
                                                     qubit_cap);
    if (std::abs(state.norm() - 1.0) > kNormTolerance) {
        throw NormError("encoded operand is not normalized");
    }
    return state;
}

} // namespace qmatops
