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

#include <doctest.h>

#include "qmatops/depth.hpp"
#include "qmatops/protocols.hpp"
#include "test_util.hpp"

using namespace qmatops;

TEST_CASE("empty circuit has depth zero")
{
    const Circuit circuit(RegisterLayout::make({{"Q", 2}}));
    const DepthReport report = analyze(circuit);
    CHECK(report.depth == 0);
    CHECK(report.total_gates() == 0);
}

TEST_CASE("addition depth is constant in the register widths")
{
    int first = 0;
    for (int size = 1; size <= 4; ++size) {
        const DepthReport report =
            analyze(build_addition_circuit(size, size), Parallelism::SharedControl);
        if (size == 1) {
            first = report.depth;
            // Frozen from the first computation of this decomposition.
            CHECK(first == 7);
        }
        CHECK(report.depth == first);
    }

    // Rectangular shapes too.
    CHECK(analyze(build_addition_circuit(1, 4)).depth == 7);
    CHECK(analyze(build_addition_circuit(3, 2)).depth == 7);
}

TEST_CASE("inner-product and multiplication depth grows affinely")
{
    for (ProtocolKind kind : {ProtocolKind::InnerProduct, ProtocolKind::Multiplication}) {
        const auto rows = scaling_report(kind, {1, 2, 3, 4});
        REQUIRE(rows.size() == 4);
        const int slope = rows[1].depth - rows[0].depth;
        CHECK(slope > 0);
        for (std::size_t i = 2; i < rows.size(); ++i) {
            CHECK(rows[i].depth - rows[i - 1].depth == slope);
        }
    }
}

TEST_CASE("inner-product size-1 golden row")
{
    // Frozen after the first computation with the ladder decomposition.
    const auto rows = scaling_report(ProtocolKind::InnerProduct, {1});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].size == 1);
    CHECK(rows[0].depth == 9);
    CHECK(rows[0].toffoli_count == 7);
    CHECK(rows[0].width == 7);
}

TEST_CASE("scaling report columns are monotone")
{
    for (ProtocolKind kind : {ProtocolKind::InnerProduct, ProtocolKind::Addition,
                              ProtocolKind::Multiplication}) {
        const auto rows = scaling_report(kind, {1, 2, 3, 4});
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].depth >= rows[i - 1].depth);
            CHECK(rows[i].toffoli_count >= rows[i - 1].toffoli_count);
            CHECK(rows[i].width > rows[i - 1].width);
        }
    }
    CHECK_THROWS_AS(scaling_report(ProtocolKind::Addition, {0}), DimensionError);
}

TEST_CASE("strict depth dominates shared-control depth")
{
    const std::vector<Circuit> circuits = {
        build_inner_product_circuit(1),  build_inner_product_circuit(3),
        build_addition_circuit(2, 3),    build_multiplication_circuit(2, 2, 1),
        build_multiplication_circuit(1, 3, 2),
    };
    for (const auto& circuit : circuits) {
        CHECK(analyze(circuit, Parallelism::Strict).depth >=
              analyze(circuit, Parallelism::SharedControl).depth);
    }
}

TEST_CASE("strict addition depth grows with the register widths")
{
    const int d1 = analyze(build_addition_circuit(1, 1), Parallelism::Strict).depth;
    const int d2 = analyze(build_addition_circuit(2, 2), Parallelism::Strict).depth;
    const int d4 = analyze(build_addition_circuit(4, 4), Parallelism::Strict).depth;
    CHECK(d2 > d1);
    CHECK(d4 > d2);
    // One extra moment per serialized controlled swap.
    CHECK(d2 - d1 == 2);
    CHECK(d4 - d2 == 4);
}

TEST_CASE("gate counts sum to the expanded total")
{
    const DepthReport report = analyze(build_multiplication_circuit(2, 3, 2));
    const ExpandedCircuit expanded = expand_for_analysis(build_multiplication_circuit(2, 3, 2));
    CHECK(report.total_gates() == static_cast<int>(expanded.gates.size()));
    CHECK(report.width == expanded.layout.total_qubits());
}

TEST_CASE("expansion never changes the circuit action")
{
    struct Case {
        Circuit circuit;
        StateVector initial;
    };
    std::mt19937_64 eng(5150);

    const auto make_case = [&](Circuit circuit) {
        StateVector initial = test::random_state(circuit.layout(), eng);
        return Case{std::move(circuit), std::move(initial)};
    };

    std::vector<Case> cases;
    cases.push_back(make_case(build_inner_product_circuit(1)));
    cases.push_back(make_case(build_inner_product_circuit(2)));
    cases.push_back(make_case(build_addition_circuit(1, 1)));
    cases.push_back(make_case(build_multiplication_circuit(1, 1, 1)));

    for (const auto& c : cases) {
        const StateVector direct = apply_circuit(c.initial, c.circuit);

        const ExpandedCircuit expanded = expand_for_analysis(c.circuit);
        Circuit runnable(expanded.layout);
        for (const auto& gate : expanded.gates) {
            runnable.append(gate);
        }
        const int extra = expanded.layout.total_qubits() - c.circuit.layout().total_qubits();
        REQUIRE(extra >= 0);
        StateVector widened = c.initial;
        if (extra > 0) {
            widened = tensor(c.initial, StateVector::zero_state(
                                            RegisterLayout::make({{"_work", extra}})));
        }
        const StateVector via_expansion = apply_circuit(widened, runnable);

        // The work register must return to |0>, leaving the original state
        // in the leading block.
        const auto dim = static_cast<std::uint64_t>(direct.amplitudes().size());
        const std::uint64_t work_dim = std::uint64_t{1} << extra;
        for (std::uint64_t i = 0; i < dim; ++i) {
            CHECK(std::abs(via_expansion.amplitude(i * work_dim) - direct.amplitude(i)) <
                  1e-12);
            for (std::uint64_t w = 1; w < work_dim; ++w) {
                CHECK(std::abs(via_expansion.amplitude(i * work_dim + w)) < 1e-12);
            }
        }
    }
}
