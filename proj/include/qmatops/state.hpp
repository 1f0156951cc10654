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

#include <optional>

#include "qmatops/layout.hpp"
#include "qmatops/types.hpp"

namespace qmatops {

/// Dense state vector over a register layout: 2^Q complex amplitudes.
///
/// Values are immutable once constructed; every operation returns a new
/// state. Construction enforces the qubit cap and finite amplitudes.
class StateVector {
public:
    static StateVector zero_state(RegisterLayout layout, int qubit_cap = kDefaultQubitCap);
    static StateVector basis_state(RegisterLayout layout, const BasisAssignment& assignment,
                                   int qubit_cap = kDefaultQubitCap);
    static StateVector from_amplitudes(RegisterLayout layout, ComplexVector amplitudes,
                                       int qubit_cap = kDefaultQubitCap);

    const RegisterLayout& layout() const { return layout_; }
    const ComplexVector& amplitudes() const { return amps_; }
    int total_qubits() const { return layout_.total_qubits(); }
    int qubit_cap() const { return qubit_cap_; }

    Complex amplitude(std::uint64_t index) const;
    Complex amplitude(const BasisAssignment& assignment) const;

    /// Euclidean norm of the amplitude vector.
    double norm() const;

private:
    StateVector(RegisterLayout layout, ComplexVector amps, int qubit_cap)
        : layout_(std::move(layout)), amps_(std::move(amps)), qubit_cap_(qubit_cap)
    {
    }

    RegisterLayout layout_;
    ComplexVector amps_;
    int qubit_cap_ = kDefaultQubitCap;

    friend StateVector tensor(const StateVector&, const StateVector&);
    friend class GateApplier;
};

/// Tensor product; the left operand's registers stay most significant.
StateVector tensor(const StateVector& a, const StateVector& b);

struct Projection {
    double probability = 0.0;
    /// Renormalized state over the registers not fixed by the pattern.
    /// Absent when the probability is zero.
    std::optional<StateVector> conditional;
};

/// Projects onto the subspace where every register in `pattern` holds the
/// given value. Zero probability is a valid outcome, not an error.
Projection project_and_extract(const StateVector& state, const BasisAssignment& pattern);

namespace detail {
void check_qubit_cap(int qubits, int cap);
}

} // namespace qmatops
