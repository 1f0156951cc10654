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

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qmatops/state.hpp"

namespace qmatops {

/// One control wire: the gate's payload fires only when `qubit` holds
/// `value` (0 or 1).
struct QubitControl {
    int qubit = 0;
    int value = 1;
};

struct XPayload {
    std::vector<int> targets;
};

struct SwapPayload {
    std::vector<std::pair<int, int>> pairs;
};

struct HPayload {
    int target = 0;
};

using GatePayload = std::variant<XPayload, SwapPayload, HPayload>;

/// Projector-controlled primitive: acts as its payload on the subspace
/// where every control holds its required bit, as identity elsewhere.
/// An empty control list makes the payload unconditional.
struct Gate {
    std::vector<QubitControl> controls;
    GatePayload payload;
};

enum class GateKind { X, H, Swap, Cnot, Toffoli, Mcx, Cswap, ProjCtrl };

Gate x_gate(int target);
Gate h_gate(int target);
Gate swap_gate(int a, int b);
Gate cnot_gate(int control, int target);
Gate toffoli_gate(int control_a, int control_b, int target);

/// General projector-controlled gate. Controls must be non-empty and
/// disjoint from the payload qubits.
Gate proj_controlled(std::vector<QubitControl> controls, GatePayload payload);

/// Structural classification (control polarity does not change the class;
/// a Toffoli with negated controls is still a Toffoli).
GateKind classify(const Gate& gate);
std::string kind_name(GateKind kind);

std::vector<int> payload_qubits(const Gate& gate);
std::vector<int> gate_qubits(const Gate& gate);

/// Applies one gate, checking index bounds and norm preservation.
StateVector apply_gate(const StateVector& state, const Gate& gate);

enum class Parallelism { Strict, SharedControl };

/// Greedy earliest-moment (ASAP) scheduling that never reorders
/// conflicting gates. Strict mode requires fully disjoint qubit sets per
/// moment. Shared-control mode additionally packs two gates into one
/// moment when every qubit they share is a control in both, or when they
/// share a control qubit with opposite required bits (such gates act on
/// orthogonal subspaces and commute even if their targets coincide).
std::vector<std::vector<std::size_t>> schedule_moments(const std::vector<Gate>& gates,
                                                       Parallelism convention);

bool moment_compatible(const Gate& a, const Gate& b, Parallelism convention);

struct StageSpan {
    std::string name;
    std::size_t begin = 0;
    std::size_t end = 0; // one past the last gate of the stage
};

/// Ordered gate sequence over a fixed layout, with optional named stage
/// boundaries for state inspection.
class Circuit {
public:
    explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

    void append(Gate gate);
    /// Starts a new named stage at the current position.
    void begin_stage(std::string name);

    const RegisterLayout& layout() const { return layout_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::vector<StageSpan> stages() const;
    bool empty() const { return gates_.empty(); }

private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
    std::vector<std::pair<std::string, std::size_t>> stage_marks_;
};

StateVector apply_circuit(const StateVector& state, const Circuit& circuit);
/// Applies only the first `gate_count` gates.
StateVector apply_prefix(const StateVector& state, const Circuit& circuit,
                         std::size_t gate_count);

/// Expands a multi-controlled X into a clean-ancilla Toffoli ladder:
/// pairwise AND accumulation into work qubits, a final Toffoli onto the
/// target, then uncomputation. Uses #controls-2 work ancillas and exactly
/// 2*#controls-3 Toffolis for 2 or more controls; a single control emits a
/// plain CNOT. Negative controls are realized by X conjugation. Work
/// ancillas are returned to |0>.
Circuit decompose_mcx(const RegisterLayout& layout, const std::vector<QubitControl>& controls,
                      int target, const std::vector<int>& work_ancillas);

/// Line-based text form, one gate per line:
///   <kind> <+|-><control>... | <payload>
/// X-type payloads list target qubits; swap payloads list a:b pairs.
std::string circuit_to_text(const Circuit& circuit);

} // namespace qmatops
