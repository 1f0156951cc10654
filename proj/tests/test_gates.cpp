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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qmatops/gates.hpp"
#include "test_util.hpp"

using namespace qmatops;

namespace {

// Independent dense oracle: kron products assembled by hand, most
// significant factor first (matching the layout convention).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Basis-permutation oracle for a multi-controlled X, written directly from
// the definition (flip the target bit iff every control reads its value).
std::uint64_t ideal_mcx_image(std::uint64_t index, int total_qubits,
                              const std::vector<QubitControl>& controls, int target)
{
    for (const auto& c : controls) {
        const std::uint64_t bit = (index >> (total_qubits - 1 - c.qubit)) & 1;
        if (bit != static_cast<std::uint64_t>(c.value)) {
            return index;
        }
    }
    return index ^ (std::uint64_t{1} << (total_qubits - 1 - target));
}

} // namespace

TEST_CASE("single-qubit gates")
{
    const RegisterLayout layout = RegisterLayout::make({{"Q", 1}});
    const StateVector zero = StateVector::zero_state(layout);
    const StateVector one = apply_gate(zero, x_gate(0));
    CHECK(one.amplitude(std::uint64_t{1}) == Complex{1.0, 0.0});

    // H|1> = (|0> - |1>)/sqrt(2)
    const StateVector minus = apply_gate(one, h_gate(0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(minus.amplitude(std::uint64_t{0}) - Complex{inv_sqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(minus.amplitude(std::uint64_t{1}) - Complex{-inv_sqrt2, 0.0}) < 1e-15);
}

TEST_CASE("swap gate exchanges register values")
{
    const RegisterLayout layout = RegisterLayout::make({{"P", 1}, {"Q", 1}});
    const StateVector in = StateVector::basis_state(layout, {{"P", 1}, {"Q", 0}});
    const StateVector out = apply_gate(in, swap_gate(0, 1));
    CHECK(out.amplitude({{"P", 0}, {"Q", 1}}) == Complex{1.0, 0.0});
}

TEST_CASE("pair-agreement mark against the dense operator")
{
    // Three qubits (s1, s2, a). The marking operator is
    // P x sigma_x + (I - P) x I with P the projector on |m>|m>.
    const RegisterLayout layout = RegisterLayout::make({{"s1", 1}, {"s2", 1}, {"a", 1}});
    const ComplexMatrix eye2 = ComplexMatrix::Identity(2, 2);
    ComplexMatrix pauli_x(2, 2);
    pauli_x << 0, 1, 1, 0;

    for (int m : {0, 1}) {
        ComplexMatrix ket = ComplexMatrix::Zero(2, 1);
        ket(m, 0) = 1.0;
        const ComplexMatrix proj1 = ket * ket.adjoint();
        const ComplexMatrix proj = kron(proj1, proj1);
        const ComplexMatrix dense =
            kron(proj, pauli_x) + kron(ComplexMatrix::Identity(4, 4) - proj, eye2);

        const Gate gate = proj_controlled({{0, m}, {1, m}}, XPayload{{2}});
        std::mt19937_64 eng(55u + static_cast<unsigned>(m));
        for (std::uint64_t b = 0; b < 8; ++b) {
            ComplexVector basis = ComplexVector::Zero(8);
            basis[static_cast<Eigen::Index>(b)] = 1.0;
            const ComplexVector expected = dense * basis;
            const StateVector got =
                apply_gate(StateVector::from_amplitudes(layout, basis), gate);
            CHECK((got.amplitudes() - expected).norm() < 1e-14);
        }
        const StateVector random = test::random_state(layout, eng);
        const ComplexVector expected = dense * random.amplitudes();
        CHECK((apply_gate(random, gate).amplitudes() - expected).norm() < 1e-13);
    }

    // Spot checks for the m = 1 mark.
    const Gate mark = proj_controlled({{0, 1}, {1, 1}}, XPayload{{2}});
    const StateVector in110 =
        StateVector::basis_state(layout, {{"s1", 1}, {"s2", 1}, {"a", 0}});
    CHECK(apply_gate(in110, mark).amplitude({{"s1", 1}, {"s2", 1}, {"a", 1}}) ==
          Complex{1.0, 0.0});
    const StateVector in100 =
        StateVector::basis_state(layout, {{"s1", 1}, {"s2", 0}, {"a", 0}});
    CHECK(apply_gate(in100, mark).amplitude({{"s1", 1}, {"s2", 0}, {"a", 0}}) ==
          Complex{1.0, 0.0});
}

TEST_CASE("proj_controlled validation")
{
    CHECK_THROWS_AS(proj_controlled({}, XPayload{{0}}), GateError);
    CHECK_THROWS_AS(proj_controlled({{0, 1}}, XPayload{{0}}), GateError);
    CHECK_THROWS_AS(proj_controlled({{0, 2}}, XPayload{{1}}), GateError);
    CHECK_THROWS_AS(proj_controlled({{0, 1}}, HPayload{1}), GateError);
    CHECK_THROWS_AS(proj_controlled({{0, 1}}, SwapPayload{{{1, 1}}}), GateError);
}

TEST_CASE("all-ones flag gate")
{
    const RegisterLayout layout = RegisterLayout::make({{"A", 2}, {"B1", 1}});
    std::vector<QubitControl> controls{{0, 1}, {1, 1}};
    const Gate flag = proj_controlled(controls, XPayload{{2}});
    for (std::uint64_t a = 0; a < 4; ++a) {
        const StateVector in = StateVector::basis_state(layout, {{"A", a}, {"B1", 0}});
        const StateVector out = apply_gate(in, flag);
        const std::uint64_t expected_b1 = a == 3 ? 1 : 0;
        CHECK(out.amplitude({{"A", a}, {"B1", expected_b1}}) == Complex{1.0, 0.0});
    }
}

TEST_CASE("negative-control flag gate")
{
    // Flip b2 exactly when d1 = 0, d2 = 0 and b1 = 1.
    const RegisterLayout layout =
        RegisterLayout::make({{"d1", 1}, {"d2", 1}, {"b1", 1}, {"b2", 1}});
    const Gate gate = proj_controlled({{0, 0}, {1, 0}, {2, 1}}, XPayload{{3}});
    for (std::uint64_t i = 0; i < 8; ++i) {
        const StateVector in = StateVector::from_amplitudes(
            layout, [&] {
                ComplexVector v = ComplexVector::Zero(16);
                v[static_cast<Eigen::Index>(i << 1)] = 1.0; // b2 = 0
                return v;
            }());
        const StateVector out = apply_gate(in, gate);
        const bool fires = i == 1; // (d1,d2,b1) = (0,0,1)
        CHECK(out.amplitude((i << 1) | (fires ? 1 : 0)) == Complex{1.0, 0.0});
    }
}

TEST_CASE("controlled swap folds registers")
{
    const RegisterLayout layout =
        RegisterLayout::make({{"d1", 1}, {"r1", 1}, {"c1", 1}, {"r2", 1}, {"c2", 1}});
    const Gate fold = proj_controlled({{0, 1}}, SwapPayload{{{1, 3}, {2, 4}}});

    const StateVector active = StateVector::basis_state(
        layout, {{"d1", 1}, {"r1", 0}, {"c1", 0}, {"r2", 1}, {"c2", 1}});
    CHECK(apply_gate(active, fold)
              .amplitude({{"d1", 1}, {"r1", 1}, {"c1", 1}, {"r2", 0}, {"c2", 0}}) ==
          Complex{1.0, 0.0});

    const StateVector idle = StateVector::basis_state(
        layout, {{"d1", 0}, {"r1", 0}, {"c1", 0}, {"r2", 1}, {"c2", 1}});
    CHECK(apply_gate(idle, fold)
              .amplitude({{"d1", 0}, {"r1", 0}, {"c1", 0}, {"r2", 1}, {"c2", 1}}) ==
          Complex{1.0, 0.0});
}

TEST_CASE("gates preserve the norm on random states")
{
    const RegisterLayout layout = RegisterLayout::make({{"Q", 5}});
    const std::vector<Gate> gates = {
        x_gate(0),
        h_gate(2),
        swap_gate(1, 3),
        toffoli_gate(0, 1, 4),
        proj_controlled({{0, 1}, {1, 0}, {2, 1}}, XPayload{{4}}),
        proj_controlled({{4, 1}}, SwapPayload{{{0, 2}, {1, 3}}}),
    };
    std::mt19937_64 eng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector state = test::random_state(layout, eng);
        for (const auto& gate : gates) {
            CHECK(std::abs(apply_gate(state, gate).norm() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("self-inverse gates")
{
    const RegisterLayout layout = RegisterLayout::make({{"Q", 4}});
    std::mt19937_64 eng(31);
    const StateVector state = test::random_state(layout, eng);
    const std::vector<Gate> permutations = {
        x_gate(1),
        swap_gate(0, 3),
        toffoli_gate(0, 1, 2),
        proj_controlled({{0, 0}, {3, 1}}, XPayload{{1, 2}}),
        proj_controlled({{2, 1}}, SwapPayload{{{0, 1}}}),
    };
    for (const auto& gate : permutations) {
        const StateVector twice = apply_gate(apply_gate(state, gate), gate);
        CHECK((twice.amplitudes() - state.amplitudes()).norm() == 0.0);
    }
    const StateVector h_twice = apply_gate(apply_gate(state, h_gate(2)), h_gate(2));
    CHECK((h_twice.amplitudes() - state.amplitudes()).norm() < 1e-12);
}

TEST_CASE("pair-agreement marks commute in any order")
{
    for (int n : {1, 2, 3}) {
        const RegisterLayout layout =
            RegisterLayout::make({{"S1", n}, {"S2", n}, {"A", n}});
        std::vector<Gate> marks;
        for (int j = 0; j < n; ++j) {
            for (int m : {1, 0}) {
                marks.push_back(proj_controlled(
                    {{layout.qubit("S1", j), m}, {layout.qubit("S2", j), m}},
                    XPayload{{layout.qubit("A", j)}}));
            }
        }
        std::mt19937_64 eng(404u + static_cast<unsigned>(n));
        const StateVector state = test::random_state(layout, eng);
        StateVector reference = state;
        for (const auto& g : marks) {
            reference = apply_gate(reference, g);
        }
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::vector<Gate> order = marks;
            std::shuffle(order.begin(), order.end(), eng);
            StateVector permuted = state;
            for (const auto& g : order) {
                permuted = apply_gate(permuted, g);
            }
            CHECK((permuted.amplitudes() - reference.amplitudes()).norm() < 1e-12);
        }
    }
}

TEST_CASE("apply_gate rejects out-of-range qubits")
{
    const RegisterLayout layout = RegisterLayout::make({{"Q", 2}});
    const StateVector state = StateVector::zero_state(layout);
    CHECK_THROWS_AS(apply_gate(state, x_gate(2)), GateError);
    CHECK_THROWS_AS(apply_gate(state, toffoli_gate(0, 1, 5)), GateError);
}

TEST_CASE("decompose_mcx small cases")
{
    const RegisterLayout layout = RegisterLayout::make({{"Q", 8}});

    const Circuit single = decompose_mcx(layout, {{0, 1}}, 1, {});
    REQUIRE(single.gates().size() == 1);
    CHECK(classify(single.gates()[0]) == GateKind::Cnot);

    const Circuit twoc = decompose_mcx(layout, {{0, 1}, {1, 1}}, 2, {});
    REQUIRE(twoc.gates().size() == 1);
    CHECK(classify(twoc.gates()[0]) == GateKind::Toffoli);

    CHECK_THROWS_AS(decompose_mcx(layout, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 4, {5}),
                    GateError);
    CHECK_THROWS_AS(decompose_mcx(layout, {}, 0, {}), GateError);
}

TEST_CASE("decompose_mcx matches the ideal gate exhaustively")
{
    // Five positive controls, four work ancillas on offer (three needed).
    {
        const int controls_n = 5;
        const RegisterLayout layout = RegisterLayout::make({{"Q", 10}});
        std::vector<QubitControl> controls;
        for (int q = 0; q < controls_n; ++q) {
            controls.push_back({q, 1});
        }
        const int target = controls_n;
        const Circuit circuit =
            decompose_mcx(layout, controls, target, {6, 7, 8, 9});

        for (std::uint64_t pattern = 0; pattern < (1u << (controls_n + 1)); ++pattern) {
            const std::uint64_t index = pattern << 4; // ancillas at zero
            ComplexVector amps = ComplexVector::Zero(1 << 10);
            amps[static_cast<Eigen::Index>(index)] = 1.0;
            const StateVector out =
                apply_circuit(StateVector::from_amplitudes(layout, amps), circuit);
            const std::uint64_t expected = ideal_mcx_image(index, 10, controls, target);
            CHECK(out.amplitude(expected) == Complex{1.0, 0.0});
        }
    }

    // Mixed polarities.
    {
        const RegisterLayout layout = RegisterLayout::make({{"Q", 7}});
        const std::vector<QubitControl> controls{{0, 0}, {1, 1}, {2, 0}, {3, 1}};
        const Circuit circuit = decompose_mcx(layout, controls, 4, {5, 6});
        for (std::uint64_t pattern = 0; pattern < 32; ++pattern) {
            const std::uint64_t index = pattern << 2;
            ComplexVector amps = ComplexVector::Zero(1 << 7);
            amps[static_cast<Eigen::Index>(index)] = 1.0;
            const StateVector out =
                apply_circuit(StateVector::from_amplitudes(layout, amps), circuit);
            CHECK(out.amplitude(ideal_mcx_image(index, 7, controls, 4)) ==
                  Complex{1.0, 0.0});
        }
    }
}

TEST_CASE("decompose_mcx Toffoli counts")
{
    const RegisterLayout layout = RegisterLayout::make({{"Q", 20}});
    std::vector<int> counts;
    for (int p = 2; p <= 10; ++p) {
        std::vector<QubitControl> controls;
        for (int q = 0; q < p; ++q) {
            controls.push_back({q, 1});
        }
        std::vector<int> work;
        for (int q = 0; q < p - 2; ++q) {
            work.push_back(11 + q);
        }
        const Circuit circuit = decompose_mcx(layout, controls, 10, work);
        int toffolis = 0;
        for (const auto& g : circuit.gates()) {
            if (classify(g) == GateKind::Toffoli) {
                ++toffolis;
            }
        }
        CHECK(toffolis == 2 * p - 3);
        counts.push_back(toffolis);
    }
    // Linear growth: exact second differences of zero.
    for (std::size_t i = 2; i < counts.size(); ++i) {
        CHECK(counts[i] - counts[i - 1] == counts[i - 1] - counts[i - 2]);
    }
}

TEST_CASE("schedule_moments parallelism conventions")
{
    // n marks on disjoint triples pack into one moment either way.
    {
        std::vector<Gate> gates;
        for (int j = 0; j < 4; ++j) {
            gates.push_back(proj_controlled({{j, 1}, {4 + j, 1}}, XPayload{{8 + j}}));
        }
        CHECK(schedule_moments(gates, Parallelism::Strict).size() == 1);
        CHECK(schedule_moments(gates, Parallelism::SharedControl).size() == 1);
    }

    // Controlled swaps hanging off one control: a single moment under
    // shared-control, serialized under strict.
    {
        const int n_plus_m = 5;
        std::vector<Gate> gates;
        for (int j = 0; j < n_plus_m; ++j) {
            gates.push_back(
                proj_controlled({{0, 1}}, SwapPayload{{{1 + 2 * j, 2 + 2 * j}}}));
        }
        CHECK(schedule_moments(gates, Parallelism::SharedControl).size() == 1);
        CHECK(schedule_moments(gates, Parallelism::Strict).size() ==
              static_cast<std::size_t>(n_plus_m));
    }

    // Two X gates on one qubit never share a moment.
    {
        const std::vector<Gate> gates{x_gate(0), x_gate(0)};
        CHECK(schedule_moments(gates, Parallelism::SharedControl).size() == 2);
        CHECK(schedule_moments(gates, Parallelism::Strict).size() == 2);
    }

    // Mutually exclusive marks (shared controls, opposite bits) may share
    // a moment even though they write the same target.
    {
        const std::vector<Gate> gates{
            proj_controlled({{0, 1}, {1, 1}}, XPayload{{2}}),
            proj_controlled({{0, 0}, {1, 0}}, XPayload{{2}}),
        };
        CHECK(schedule_moments(gates, Parallelism::SharedControl).size() == 1);
        CHECK(schedule_moments(gates, Parallelism::Strict).size() == 2);
    }

    // A gate targeting another gate's control stays ordered.
    {
        const std::vector<Gate> gates{cnot_gate(0, 1), x_gate(0)};
        CHECK(schedule_moments(gates, Parallelism::SharedControl).size() == 2);
    }

    CHECK(schedule_moments({}, Parallelism::Strict).empty());
}

TEST_CASE("scheduled moments stay pairwise compatible")
{
    std::vector<Gate> gates;
    std::mt19937_64 eng(99);
    std::uniform_int_distribution<int> qubit(0, 9);
    for (int i = 0; i < 60; ++i) {
        const int a = qubit(eng);
        int b = qubit(eng);
        while (b == a) {
            b = qubit(eng);
        }
        int c = qubit(eng);
        while (c == a || c == b) {
            c = qubit(eng);
        }
        switch (i % 4) {
        case 0:
            gates.push_back(x_gate(a));
            break;
        case 1:
            gates.push_back(h_gate(a));
            break;
        case 2:
            gates.push_back(proj_controlled({{a, i % 2}}, XPayload{{b}}));
            break;
        default:
            gates.push_back(proj_controlled({{a, 1}, {b, 0}}, XPayload{{c}}));
            break;
        }
    }
    for (Parallelism convention : {Parallelism::Strict, Parallelism::SharedControl}) {
        const auto moments = schedule_moments(gates, convention);
        for (const auto& moment : moments) {
            for (std::size_t i = 0; i < moment.size(); ++i) {
                for (std::size_t j = i + 1; j < moment.size(); ++j) {
                    CHECK(moment_compatible(gates[moment[i]], gates[moment[j]], convention));
                }
            }
        }
        std::size_t scheduled = 0;
        for (const auto& moment : moments) {
            scheduled += moment.size();
        }
        CHECK(scheduled == gates.size());
    }
}

TEST_CASE("circuit text serialization")
{
    Circuit circuit(RegisterLayout::make({{"Q", 5}}));
    circuit.append(h_gate(0));
    circuit.append(proj_controlled({{0, 1}, {1, 0}}, XPayload{{2}}));
    circuit.append(proj_controlled({{4, 1}}, SwapPayload{{{0, 2}, {1, 3}}}));
    circuit.append(x_gate(3));
    CHECK(circuit_to_text(circuit) == "h | 0\n"
                                      "toffoli +0 -1 | 2\n"
                                      "proj +4 | 0:2 1:3\n"
                                      "x | 3\n");
}
