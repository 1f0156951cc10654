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

#include "qmatops/gates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace qmatops {

namespace {

void require_distinct(const std::vector<int>& qubits, const char* what)
{
    std::unordered_set<int> seen;
    for (int q : qubits) {
        if (q < 0) {
            throw GateError(std::string(what) + ": negative qubit index");
        }
        if (!seen.insert(q).second) {
            throw GateError(std::string(what) + ": qubit " + std::to_string(q) +
                            " used more than once");
        }
    }
}

void validate_gate(const Gate& gate)
{
    std::vector<int> targets = payload_qubits(gate);
    if (targets.empty()) {
        throw GateError("gate payload has no target qubits");
    }
    require_distinct(targets, "gate payload");

    std::vector<int> all = targets;
    for (const auto& c : gate.controls) {
        if (c.value != 0 && c.value != 1) {
            throw GateError("control value must be 0 or 1");
        }
        all.push_back(c.qubit);
    }
    require_distinct(all, "gate");

    if (std::holds_alternative<HPayload>(gate.payload) && !gate.controls.empty()) {
        throw GateError("Hadamard gates take no controls");
    }
}

std::uint64_t stride_of(const RegisterLayout& layout, int qubit)
{
    if (qubit >= layout.total_qubits()) {
        throw GateError("gate qubit " + std::to_string(qubit) + " out of range for a " +
                        std::to_string(layout.total_qubits()) + "-qubit layout");
    }
    return layout.qubit_stride(qubit);
}

} // namespace

Gate x_gate(int target)
{
    Gate g{{}, XPayload{{target}}};
    validate_gate(g);
    return g;
}

Gate h_gate(int target)
{
    Gate g{{}, HPayload{target}};
    validate_gate(g);
    return g;
}

Gate swap_gate(int a, int b)
{
    Gate g{{}, SwapPayload{{{a, b}}}};
    validate_gate(g);
    return g;
}

Gate cnot_gate(int control, int target)
{
    Gate g{{{control, 1}}, XPayload{{target}}};
    validate_gate(g);
    return g;
}

Gate toffoli_gate(int control_a, int control_b, int target)
{
    Gate g{{{control_a, 1}, {control_b, 1}}, XPayload{{target}}};
    validate_gate(g);
    return g;
}

Gate proj_controlled(std::vector<QubitControl> controls, GatePayload payload)
{
    if (controls.empty()) {
        throw GateError("projector-controlled gate needs at least one control");
    }
    if (std::holds_alternative<HPayload>(payload)) {
        throw GateError("projector-controlled payload must be X or SWAP");
    }
    Gate g{std::move(controls), std::move(payload)};
    validate_gate(g);
    return g;
}

GateKind classify(const Gate& gate)
{
    const std::size_t n_controls = gate.controls.size();
    if (std::holds_alternative<HPayload>(gate.payload)) {
        return GateKind::H;
    }
    if (const auto* x = std::get_if<XPayload>(&gate.payload)) {
        if (x->targets.size() != 1) {
            return n_controls == 0 ? GateKind::X : GateKind::ProjCtrl;
        }
        switch (n_controls) {
        case 0:
            return GateKind::X;
        case 1:
            return GateKind::Cnot;
        case 2:
            return GateKind::Toffoli;
        default:
            return GateKind::Mcx;
        }
    }
    const auto& swap = std::get<SwapPayload>(gate.payload);
    if (n_controls == 0 && swap.pairs.size() == 1) {
        return GateKind::Swap;
    }
    if (n_controls == 1 && swap.pairs.size() == 1) {
        return GateKind::Cswap;
    }
    return GateKind::ProjCtrl;
}

std::string kind_name(GateKind kind)
{
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::Swap:
        return "swap";
    case GateKind::Cnot:
        return "cnot";
    case GateKind::Toffoli:
        return "toffoli";
    case GateKind::Mcx:
        return "mcx";
    case GateKind::Cswap:
        return "cswap";
    case GateKind::ProjCtrl:
        return "proj";
    }
    return "?";
}

std::vector<int> payload_qubits(const Gate& gate)
{
    std::vector<int> qubits;
    if (const auto* x = std::get_if<XPayload>(&gate.payload)) {
        qubits = x->targets;
    } else if (const auto* s = std::get_if<SwapPayload>(&gate.payload)) {
        for (const auto& [a, b] : s->pairs) {
            qubits.push_back(a);
            qubits.push_back(b);
        }
    } else {
        qubits.push_back(std::get<HPayload>(gate.payload).target);
    }
    return qubits;
}

std::vector<int> gate_qubits(const Gate& gate)
{
    std::vector<int> qubits = payload_qubits(gate);
    for (const auto& c : gate.controls) {
        qubits.push_back(c.qubit);
    }
    return qubits;
}

StateVector apply_gate(const StateVector& state, const Gate& gate)
{
    validate_gate(gate);
    const RegisterLayout& layout = state.layout();
    ComplexVector amps = state.amplitudes();
    const double norm_before = amps.norm();
    const auto dim = static_cast<std::uint64_t>(amps.size());

    if (const auto* h = std::get_if<HPayload>(&gate.payload)) {
        const std::uint64_t stride = stride_of(layout, h->target);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (std::uint64_t block = 0; block < dim; block += 2 * stride) {
            for (std::uint64_t i = block; i < block + stride; ++i) {
                const Complex a = amps[static_cast<Eigen::Index>(i)];
                const Complex b = amps[static_cast<Eigen::Index>(i + stride)];
                amps[static_cast<Eigen::Index>(i)] = (a + b) * inv_sqrt2;
                amps[static_cast<Eigen::Index>(i + stride)] = (a - b) * inv_sqrt2;
            }
        }
    } else {
        std::uint64_t cmask = 0;
        std::uint64_t cval = 0;
        for (const auto& c : gate.controls) {
            const std::uint64_t s = stride_of(layout, c.qubit);
            cmask |= s;
            if (c.value == 1) {
                cval |= s;
            }
        }
        if (const auto* x = std::get_if<XPayload>(&gate.payload)) {
            std::uint64_t xmask = 0;
            for (int t : x->targets) {
                xmask |= stride_of(layout, t);
            }
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & cmask) != cval) {
                    continue;
                }
                const std::uint64_t j = i ^ xmask;
                if (j > i) {
                    std::swap(amps[static_cast<Eigen::Index>(i)],
                              amps[static_cast<Eigen::Index>(j)]);
                }
            }
        } else {
            const auto& pairs = std::get<SwapPayload>(gate.payload).pairs;
            std::vector<std::pair<std::uint64_t, std::uint64_t>> strides;
            strides.reserve(pairs.size());
            for (const auto& [a, b] : pairs) {
                strides.emplace_back(stride_of(layout, a), stride_of(layout, b));
            }
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & cmask) != cval) {
                    continue;
                }
                std::uint64_t j = i;
                for (const auto& [sa, sb] : strides) {
                    const bool ba = (i & sa) != 0;
                    const bool bb = (i & sb) != 0;
                    if (ba != bb) {
                        j ^= sa | sb;
                    }
                }
                if (j > i) {
                    std::swap(amps[static_cast<Eigen::Index>(i)],
                              amps[static_cast<Eigen::Index>(j)]);
                }
            }
        }
    }

    const double norm_after = amps.norm();
    if (!std::isfinite(norm_after) ||
        std::abs(norm_after - norm_before) > kNormTolerance * std::max(1.0, norm_before)) {
        throw NormError("gate application drifted the state norm from " +
                        std::to_string(norm_before) + " to " + std::to_string(norm_after));
    }
    return StateVector::from_amplitudes(layout, std::move(amps), state.qubit_cap());
}

bool moment_compatible(const Gate& a, const Gate& b, Parallelism convention)
{
    std::unordered_set<int> qa;
    for (int q : gate_qubits(a)) {
        qa.insert(q);
    }
    bool overlap = false;
    for (int q : gate_qubits(b)) {
        if (qa.count(q)) {
            overlap = true;
            break;
        }
    }
    if (!overlap) {
        return true;
    }
    if (convention == Parallelism::Strict) {
        return false;
    }

    // Opposite required bits on a shared control make the gates mutually
    // exclusive: they act on orthogonal subspaces and commute.
    for (const auto& ca : a.controls) {
        for (const auto& cb : b.controls) {
            if (ca.qubit == cb.qubit && ca.value != cb.value) {
                return true;
            }
        }
    }

    // Otherwise every shared qubit must be a control on both sides.
    std::unordered_set<int> ctrl_a;
    for (const auto& c : a.controls) {
        ctrl_a.insert(c.qubit);
    }
    std::unordered_set<int> ctrl_b;
    for (const auto& c : b.controls) {
        ctrl_b.insert(c.qubit);
    }
    for (int q : gate_qubits(b)) {
        if (qa.count(q) && (!ctrl_a.count(q) || !ctrl_b.count(q))) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> schedule_moments(const std::vector<Gate>& gates,
                                                       Parallelism convention)
{
    std::vector<std::vector<std::size_t>> moments;
    std::vector<std::size_t> assigned(gates.size(), 0);
    for (std::size_t g = 0; g < gates.size(); ++g) {
        std::size_t moment = 0;
        for (std::size_t h = 0; h < g; ++h) {
            if (!moment_compatible(gates[g], gates[h], convention)) {
                moment = std::max(moment, assigned[h] + 1);
            }
        }
        assigned[g] = moment;
        if (moment >= moments.size()) {
            moments.resize(moment + 1);
        }
        moments[moment].push_back(g);
    }
    return moments;
}

void Circuit::append(Gate gate)
{
    validate_gate(gate);
    for (int q : gate_qubits(gate)) {
        if (q >= layout_.total_qubits()) {
            throw GateError("gate qubit " + std::to_string(q) + " outside circuit layout");
        }
    }
    gates_.push_back(std::move(gate));
}

void Circuit::begin_stage(std::string name)
{
    stage_marks_.emplace_back(std::move(name), gates_.size());
}

std::vector<StageSpan> Circuit::stages() const
{
    std::vector<StageSpan> spans;
    for (std::size_t i = 0; i < stage_marks_.size(); ++i) {
        const std::size_t end =
            (i + 1 < stage_marks_.size()) ? stage_marks_[i + 1].second : gates_.size();
        spans.push_back({stage_marks_[i].first, stage_marks_[i].second, end});
    }
    return spans;
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit)
{
    return apply_prefix(state, circuit, circuit.gates().size());
}

StateVector apply_prefix(const StateVector& state, const Circuit& circuit,
                         std::size_t gate_count)
{
    if (!state.layout().same_shape(circuit.layout())) {
        throw LayoutError("state layout does not match circuit layout");
    }
    if (gate_count > circuit.gates().size()) {
        throw GateError("gate count exceeds circuit length");
    }
    StateVector current = state;
    for (std::size_t i = 0; i < gate_count; ++i) {
        current = apply_gate(current, circuit.gates()[i]);
    }
    return current;
}

Circuit decompose_mcx(const RegisterLayout& layout, const std::vector<QubitControl>& controls,
                      int target, const std::vector<int>& work_ancillas)
{
    if (controls.empty()) {
        throw GateError("decompose_mcx needs at least one control");
    }
    const std::size_t p = controls.size();
    const std::size_t needed = p > 2 ? p - 2 : 0;
    if (work_ancillas.size() < needed) {
        throw GateError("decompose_mcx: " + std::to_string(needed) +
                        " work ancillas required, got " +
                        std::to_string(work_ancillas.size()));
    }
    std::vector<int> all{target};
    for (const auto& c : controls) {
        all.push_back(c.qubit);
    }
    for (std::size_t i = 0; i < needed; ++i) {
        all.push_back(work_ancillas[i]);
    }
    require_distinct(all, "decompose_mcx");
    for (int q : all) {
        if (q >= layout.total_qubits()) {
            throw GateError("decompose_mcx qubit out of range");
        }
    }

    Circuit circuit(layout);
    for (const auto& c : controls) {
        if (c.value == 0) {
            circuit.append(x_gate(c.qubit));
        }
    }

    if (p == 1) {
        circuit.append(cnot_gate(controls[0].qubit, target));
    } else if (p == 2) {
        circuit.append(toffoli_gate(controls[0].qubit, controls[1].qubit, target));
    } else {
        // AND ladder: w0 = c0 & c1, w_i = w_{i-1} & c_{i+1}, final Toffoli
        // onto the target, then uncompute in reverse.
        std::vector<Gate> ladder;
        ladder.push_back(toffoli_gate(controls[0].qubit, controls[1].qubit, work_ancillas[0]));
        for (std::size_t i = 1; i < p - 2; ++i) {
            ladder.push_back(toffoli_gate(work_ancillas[i - 1], controls[i + 1].qubit,
                                          work_ancillas[i]));
        }
        for (const auto& g : ladder) {
            circuit.append(g);
        }
        circuit.append(toffoli_gate(work_ancillas[p - 3], controls[p - 1].qubit, target));
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
            circuit.append(*it);
        }
    }

    for (const auto& c : controls) {
        if (c.value == 0) {
            circuit.append(x_gate(c.qubit));
        }
    }
    return circuit;
}

std::string circuit_to_text(const Circuit& circuit)
{
    std::ostringstream out;
    for (const auto& gate : circuit.gates()) {
        out << kind_name(classify(gate));
        for (const auto& c : gate.controls) {
            out << ' ' << (c.value == 1 ? '+' : '-') << c.qubit;
        }
        out << " |";
        if (const auto* x = std::get_if<XPayload>(&gate.payload)) {
            for (int t : x->targets) {
                out << ' ' << t;
            }
        } else if (const auto* s = std::get_if<SwapPayload>(&gate.payload)) {
            for (const auto& [a, b] : s->pairs) {
                out << ' ' << a << ':' << b;
            }
        } else {
            out << ' ' << std::get<HPayload>(gate.payload).target;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace qmatops
