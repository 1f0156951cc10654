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

#include "qmatops/depth.hpp"

#include <numeric>

#include "qmatops/protocols.hpp"

namespace qmatops {

int DepthReport::total_gates() const
{
    int total = 0;
    for (const auto& [kind, n] : counts) {
        total += n;
    }
    return total;
}

int DepthReport::count(const std::string& kind) const
{
    const auto it = counts.find(kind);
    return it == counts.end() ? 0 : it->second;
}

namespace {

// Emits `gate` (a single-target controlled X) either as a native unit
// (up to two controls, polarity preserved) or through the Toffoli ladder.
void emit_controlled_x(const std::vector<QubitControl>& controls, int target,
                       const RegisterLayout& layout, std::vector<int>& work_pool,
                       std::vector<Gate>& out)
{
    if (controls.empty()) {
        out.push_back(x_gate(target));
        return;
    }
    if (controls.size() <= 2) {
        out.push_back(proj_controlled(controls, XPayload{{target}}));
        return;
    }
    const std::size_t needed = controls.size() - 2;
    std::vector<int> work(work_pool.end() - static_cast<std::ptrdiff_t>(needed),
                          work_pool.end());
    work_pool.resize(work_pool.size() - needed);
    const Circuit ladder = decompose_mcx(layout, controls, target, work);
    out.insert(out.end(), ladder.gates().begin(), ladder.gates().end());
}

std::size_t ladder_ancillas(std::size_t n_controls)
{
    return n_controls > 2 ? n_controls - 2 : 0;
}

} // namespace

ExpandedCircuit expand_for_analysis(const Circuit& circuit)
{
    // First pass: count the work ancillas each wide gate will need, so the
    // extended layout can be built up front. Every expansion draws from its
    // own slice of the pool.
    std::size_t total_work = 0;
    for (const auto& gate : circuit.gates()) {
        if (std::holds_alternative<HPayload>(gate.payload)) {
            continue;
        }
        if (const auto* x = std::get_if<XPayload>(&gate.payload)) {
            total_work += x->targets.size() * ladder_ancillas(gate.controls.size());
        } else {
            const auto& pairs = std::get<SwapPayload>(gate.payload).pairs;
            if (gate.controls.size() >= 2) {
                total_work += pairs.size() * ladder_ancillas(gate.controls.size() + 1);
            }
        }
    }

    std::vector<RegisterSpec> regs = circuit.layout().registers();
    if (total_work > 0) {
        regs.push_back({"_work", static_cast<int>(total_work)});
    }
    ExpandedCircuit expanded;
    expanded.layout = RegisterLayout::make(std::move(regs));

    std::vector<int> pool;
    const int base = circuit.layout().total_qubits();
    for (std::size_t i = 0; i < total_work; ++i) {
        pool.push_back(base + static_cast<int>(i));
    }

    for (const auto& gate : circuit.gates()) {
        if (std::holds_alternative<HPayload>(gate.payload)) {
            expanded.gates.push_back(gate);
            continue;
        }
        if (const auto* x = std::get_if<XPayload>(&gate.payload)) {
            for (int target : x->targets) {
                emit_controlled_x(gate.controls, target, expanded.layout, pool,
                                  expanded.gates);
            }
            continue;
        }
        const auto& pairs = std::get<SwapPayload>(gate.payload).pairs;
        for (const auto& [a, b] : pairs) {
            if (gate.controls.empty()) {
                expanded.gates.push_back(swap_gate(a, b));
            } else if (gate.controls.size() == 1) {
                // Fredkin; a Toffoli-class unit in the depth accounting.
                expanded.gates.push_back(
                    proj_controlled(gate.controls, SwapPayload{{{a, b}}}));
            } else {
                // CSWAP(a,b) = CNOT(b,a) . CX(controls+a -> b) . CNOT(b,a)
                expanded.gates.push_back(cnot_gate(b, a));
                std::vector<QubitControl> ctrls = gate.controls;
                ctrls.push_back({a, 1});
                emit_controlled_x(ctrls, b, expanded.layout, pool, expanded.gates);
                expanded.gates.push_back(cnot_gate(b, a));
            }
        }
    }
    return expanded;
}

DepthReport analyze(const Circuit& circuit, Parallelism convention)
{
    const ExpandedCircuit expanded = expand_for_analysis(circuit);
    DepthReport report;
    report.convention = convention;
    report.width = expanded.layout.total_qubits();
    report.depth = static_cast<int>(schedule_moments(expanded.gates, convention).size());
    for (const auto& gate : expanded.gates) {
        ++report.counts[kind_name(classify(gate))];
    }
    return report;
}

std::vector<ScalingRow> scaling_report(ProtocolKind protocol, const std::vector<int>& sizes,
                                       Parallelism convention)
{
    std::vector<ScalingRow> rows;
    rows.reserve(sizes.size());
    for (int size : sizes) {
        if (size < 1) {
            throw DimensionError("scaling_report sizes must be >= 1");
        }
        Circuit circuit = [&] {
            switch (protocol) {
            case ProtocolKind::InnerProduct:
                return build_inner_product_circuit(size);
            case ProtocolKind::Addition:
                return build_addition_circuit(size, size);
            case ProtocolKind::Multiplication:
            default:
                return build_multiplication_circuit(size, size, size);
            }
        }();
        const DepthReport report = analyze(circuit, convention);
        rows.push_back({size, report.depth, report.count("toffoli"), report.width});
    }
    return rows;
}

} // namespace qmatops
