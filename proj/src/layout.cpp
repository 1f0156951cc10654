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

#include "qmatops/layout.hpp"

#include <algorithm>
#include <unordered_set>

namespace qmatops {

RegisterLayout RegisterLayout::make(std::vector<RegisterSpec> registers)
{
    RegisterLayout layout;
    std::unordered_set<std::string> seen;
    int offset = 0;
    for (const auto& reg : registers) {
        if (reg.width < 1) {
            throw LayoutError("register '" + reg.name + "' has non-positive width");
        }
        if (reg.name.empty()) {
            throw LayoutError("register name must be non-empty");
        }
        if (!seen.insert(reg.name).second) {
            throw LayoutError("duplicate register name '" + reg.name + "'");
        }
        layout.offsets_.push_back(offset);
        offset += reg.width;
    }
    layout.regs_ = std::move(registers);
    layout.total_ = offset;
    return layout;
}

std::uint64_t RegisterLayout::dimension() const
{
    if (total_ > 63) {
        throw QubitCapError("layout with " + std::to_string(total_) +
                            " qubits has no addressable amplitude space");
    }
    return std::uint64_t{1} << total_;
}

int RegisterLayout::find(std::string_view name) const
{
    for (std::size_t i = 0; i < regs_.size(); ++i) {
        if (regs_[i].name == name) {
            return static_cast<int>(i);
        }
    }
    throw LayoutError("unknown register '" + std::string(name) + "'");
}

bool RegisterLayout::has_register(std::string_view name) const
{
    return std::any_of(regs_.begin(), regs_.end(),
                       [&](const RegisterSpec& r) { return r.name == name; });
}

int RegisterLayout::offset(std::string_view name) const
{
    return offsets_[static_cast<std::size_t>(find(name))];
}

int RegisterLayout::width(std::string_view name) const
{
    return regs_[static_cast<std::size_t>(find(name))].width;
}

int RegisterLayout::qubit(std::string_view name, int bit) const
{
    const int idx = find(name);
    const int w = regs_[static_cast<std::size_t>(idx)].width;
    if (bit < 0 || bit >= w) {
        throw LayoutError("bit " + std::to_string(bit) + " out of range for register '" +
                          std::string(name) + "'");
    }
    return offsets_[static_cast<std::size_t>(idx)] + bit;
}

std::uint64_t RegisterLayout::qubit_stride(int qubit) const
{
    if (qubit < 0 || qubit >= total_) {
        throw LayoutError("qubit index " + std::to_string(qubit) + " out of range");
    }
    return std::uint64_t{1} << (total_ - 1 - qubit);
}

std::uint64_t RegisterLayout::register_value(std::string_view name, std::uint64_t index) const
{
    const int idx = find(name);
    const int off = offsets_[static_cast<std::size_t>(idx)];
    const int w = regs_[static_cast<std::size_t>(idx)].width;
    const int shift = total_ - off - w;
    const std::uint64_t mask = (w >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << w) - 1);
    return (index >> shift) & mask;
}

bool RegisterLayout::same_shape(const RegisterLayout& other) const
{
    if (regs_.size() != other.regs_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < regs_.size(); ++i) {
        if (regs_[i].name != other.regs_[i].name || regs_[i].width != other.regs_[i].width) {
            return false;
        }
    }
    return true;
}

RegisterLayout concat(const RegisterLayout& a, const RegisterLayout& b)
{
    std::vector<RegisterSpec> regs = a.registers();
    for (const auto& reg : b.registers()) {
        if (a.has_register(reg.name)) {
            throw LayoutError("register name collision on '" + reg.name + "'");
        }
        regs.push_back(reg);
    }
    return RegisterLayout::make(std::move(regs));
}

std::uint64_t basis_index(const RegisterLayout& layout, const BasisAssignment& assignment)
{
    std::uint64_t index = 0;
    std::size_t used = 0;
    for (const auto& reg : layout.registers()) {
        const auto it = assignment.find(reg.name);
        if (it == assignment.end()) {
            throw LayoutError("assignment missing register '" + reg.name + "'");
        }
        const std::uint64_t limit = std::uint64_t{1} << reg.width;
        if (it->second >= limit) {
            throw DimensionError("value " + std::to_string(it->second) +
                                 " out of range for register '" + reg.name + "'");
        }
        const int shift = layout.total_qubits() - layout.offset(reg.name) - reg.width;
        index |= it->second << shift;
        ++used;
    }
    if (used != assignment.size()) {
        for (const auto& [name, value] : assignment) {
            if (!layout.has_register(name)) {
                throw LayoutError("assignment names unknown register '" + name + "'");
            }
        }
    }
    return index;
}

BasisAssignment basis_assignment(const RegisterLayout& layout, std::uint64_t index)
{
    if (index >= layout.dimension()) {
        throw DimensionError("basis index out of range");
    }
    BasisAssignment assignment;
    for (const auto& reg : layout.registers()) {
        assignment[reg.name] = layout.register_value(reg.name, index);
    }
    return assignment;
}

} // namespace qmatops
