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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmatops/types.hpp"

namespace qmatops {

struct RegisterSpec {
    std::string name;
    int width = 0;
};

/// Partial or complete basis-state description, register name -> value.
using BasisAssignment = std::map<std::string, std::uint64_t>;

/// Named qubit registers mapped onto contiguous global indices.
///
/// Index convention, used everywhere in this library:
///   * registers occupy global qubits in declaration order, first register
///     most significant;
///   * within a register, bit 0 of the value is the register's first
///     (most significant) qubit.
/// A printed basis ket therefore reads left to right in register order,
/// and a single register of width n holding value k sits at flat index k.
class RegisterLayout {
public:
    RegisterLayout() = default;

    /// Builds a layout. Throws LayoutError on duplicate names or
    /// non-positive widths.
    static RegisterLayout make(std::vector<RegisterSpec> registers);

    int total_qubits() const { return total_; }
    bool empty() const { return regs_.empty(); }
    const std::vector<RegisterSpec>& registers() const { return regs_; }

    /// 2^Q. Only valid for layouts small enough to simulate (Q <= 63).
    std::uint64_t dimension() const;

    bool has_register(std::string_view name) const;
    /// Global index of the register's first qubit. Throws if unknown.
    int offset(std::string_view name) const;
    int width(std::string_view name) const;
    /// Global index of bit `bit` of a register (bit 0 = most significant).
    int qubit(std::string_view name, int bit) const;

    /// Flat-index stride of a global qubit: 1 << (Q - 1 - qubit).
    std::uint64_t qubit_stride(int qubit) const;

    /// Extracts one register's value from a flat amplitude index.
    std::uint64_t register_value(std::string_view name, std::uint64_t index) const;

    bool same_shape(const RegisterLayout& other) const;

private:
    std::vector<RegisterSpec> regs_;
    std::vector<int> offsets_;
    int total_ = 0;

    int find(std::string_view name) const;
};

/// Concatenates two layouts (left registers stay most significant).
/// Throws LayoutError when register names collide.
RegisterLayout concat(const RegisterLayout& a, const RegisterLayout& b);

/// Flat amplitude index of a complete basis assignment.
/// Throws LayoutError for missing registers, DimensionError for values
/// out of range.
std::uint64_t basis_index(const RegisterLayout& layout, const BasisAssignment& assignment);

/// Inverse of basis_index.
BasisAssignment basis_assignment(const RegisterLayout& layout, std::uint64_t index);

} // namespace qmatops
