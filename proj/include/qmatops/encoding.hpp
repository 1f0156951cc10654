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

#include "qmatops/state.hpp"

namespace qmatops {

/// A classical vector or matrix embedded into register amplitudes.
///
/// The encoded state carries c * m_jl on |j>|l> (plus, when a slack
/// register is present, amplitude s on |0>|0>|1>), and has unit norm:
/// c^2 * |M|_F^2 + s^2 = 1.
struct EncodedOperand {
    ComplexMatrix raw;    // operand as given
    ComplexMatrix padded; // zero-padded to power-of-two dimensions
    double scale = 1.0;   // c
    double slack = 0.0;   // s; 0 when no slack register is used
    std::string row_register;
    std::string col_register;   // empty for plain vectors
    std::string slack_register; // empty unless the slack encoding is used
};

std::size_t next_power_of_two(std::size_t n);
int log2_exact(std::size_t n);
ComplexMatrix pad_to_power_of_two(const ComplexMatrix& m);

/// Normalized amplitude encoding of a vector: c = 1/|v|_2.
/// Throws DimensionError for the zero vector.
EncodedOperand encode_vector(const ComplexVector& v, const std::string& reg);

/// Normalized amplitude encoding of a matrix: c = 1/|M|_F.
/// Throws DimensionError for the zero matrix.
EncodedOperand encode_matrix(const ComplexMatrix& m, const std::string& row_reg,
                             const std::string& col_reg);

/// Slack encoding used by the addition protocol: amplitudes c * m_jl on
/// |j>|l>|0> plus s = sqrt(1 - c^2 |M|_F^2) on |0>|0>|1>. Requires
/// c^2 |M|_F^2 < 1; the zero matrix yields the pure slack state (s = 1).
EncodedOperand encode_matrix_with_slack(const ComplexMatrix& m, double c,
                                        const std::string& row_reg,
                                        const std::string& col_reg,
                                        const std::string& slack_reg);

/// Materializes the operand as a state over its own registers.
StateVector operand_state(const EncodedOperand& operand, int qubit_cap = kDefaultQubitCap);

} // namespace qmatops
