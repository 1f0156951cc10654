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

#include "qmatops/state.hpp"

#include <cmath>
#include <utility>

namespace qmatops {

namespace detail {

void check_qubit_cap(int qubits, int cap)
{
    if (qubits > cap) {
        throw QubitCapError("state of " + std::to_string(qubits) +
                            " qubits exceeds the cap of " + std::to_string(cap));
    }
}

} // namespace detail

StateVector StateVector::zero_state(RegisterLayout layout, int qubit_cap)
{
    detail::check_qubit_cap(layout.total_qubits(), qubit_cap);
    ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(layout.dimension()));
    amps[0] = Complex{1.0, 0.0};
    return StateVector(std::move(layout), std::move(amps), qubit_cap);
}

StateVector StateVector::basis_state(RegisterLayout layout, const BasisAssignment& assignment,
                                     int qubit_cap)
{
    detail::check_qubit_cap(layout.total_qubits(), qubit_cap);
    ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(layout.dimension()));
    amps[static_cast<Eigen::Index>(basis_index(layout, assignment))] = Complex{1.0, 0.0};
    return StateVector(std::move(layout), std::move(amps), qubit_cap);
}

StateVector StateVector::from_amplitudes(RegisterLayout layout, ComplexVector amplitudes,
                                         int qubit_cap)
{
    detail::check_qubit_cap(layout.total_qubits(), qubit_cap);
    if (static_cast<std::uint64_t>(amplitudes.size()) != layout.dimension()) {
        throw DimensionError("amplitude array length does not match 2^Q");
    }
    if (!amplitudes.allFinite()) {
        throw NormError("amplitude array contains non-finite values");
    }
    return StateVector(std::move(layout), std::move(amplitudes), qubit_cap);
}

Complex StateVector::amplitude(std::uint64_t index) const
{
    if (index >= layout_.dimension()) {
        throw DimensionError("amplitude index out of range");
    }
    return amps_[static_cast<Eigen::Index>(index)];
}

Complex StateVector::amplitude(const BasisAssignment& assignment) const
{
    return amps_[static_cast<Eigen::Index>(basis_index(layout_, assignment))];
}

double StateVector::norm() const
{
    return amps_.norm();
}

StateVector tensor(const StateVector& a, const StateVector& b)
{
    RegisterLayout joint = concat(a.layout(), b.layout());
    const int cap = std::max(a.qubit_cap(), b.qubit_cap());
    detail::check_qubit_cap(joint.total_qubits(), cap);

    const auto dim_b = static_cast<std::uint64_t>(b.amplitudes().size());
    ComplexVector amps(static_cast<Eigen::Index>(joint.dimension()));
    for (Eigen::Index ia = 0; ia < a.amplitudes().size(); ++ia) {
        const Complex va = a.amplitudes()[ia];
        const auto base = static_cast<std::uint64_t>(ia) * dim_b;
        for (Eigen::Index ib = 0; ib < b.amplitudes().size(); ++ib) {
            amps[static_cast<Eigen::Index>(base + static_cast<std::uint64_t>(ib))] =
                va * b.amplitudes()[ib];
        }
    }
    return StateVector::from_amplitudes(std::move(joint), std::move(amps), cap);
}

Projection project_and_extract(const StateVector& state, const BasisAssignment& pattern)
{
    const RegisterLayout& layout = state.layout();
    const int total = layout.total_qubits();

    std::uint64_t mask = 0;
    std::uint64_t value = 0;
    for (const auto& [name, v] : pattern) {
        const int w = layout.width(name);
        const std::uint64_t limit = std::uint64_t{1} << w;
        if (v >= limit) {
            throw DimensionError("pattern value out of range for register '" + name + "'");
        }
        const int shift = total - layout.offset(name) - w;
        mask |= (limit - 1) << shift;
        value |= v << shift;
    }

    std::vector<RegisterSpec> remaining;
    for (const auto& reg : layout.registers()) {
        if (pattern.find(reg.name) == pattern.end()) {
            remaining.push_back(reg);
        }
    }
    RegisterLayout sub = RegisterLayout::make(remaining);

    // Bit offsets of the remaining registers inside the full index, paired
    // with their packed position in the conditional index.
    struct Slice {
        int src_shift;
        int dst_shift;
        std::uint64_t value_mask;
    };
    std::vector<Slice> slices;
    int packed = sub.total_qubits();
    for (const auto& reg : remaining) {
        packed -= reg.width;
        slices.push_back({total - layout.offset(reg.name) - reg.width, packed,
                          (std::uint64_t{1} << reg.width) - 1});
    }

    const auto& amps = state.amplitudes();
    ComplexVector cond = ComplexVector::Zero(static_cast<Eigen::Index>(sub.dimension()));
    double probability = 0.0;
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        if ((idx & mask) != value) {
            continue;
        }
        probability += std::norm(amps[i]);
        std::uint64_t packed_idx = 0;
        for (const auto& s : slices) {
            packed_idx |= ((idx >> s.src_shift) & s.value_mask) << s.dst_shift;
        }
        cond[static_cast<Eigen::Index>(packed_idx)] = amps[i];
    }

    Projection result;
    result.probability = probability;
    if (probability > 0.0) {
        cond /= std::sqrt(probability);
        result.conditional =
            StateVector::from_amplitudes(std::move(sub), std::move(cond), state.qubit_cap());
    }
    return result;
}

} // namespace qmatops
