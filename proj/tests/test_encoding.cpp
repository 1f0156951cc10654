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

#include <cmath>

#include "qmatops/encoding.hpp"
#include "test_util.hpp"

using namespace qmatops;

TEST_CASE("encode_vector examples")
{
    ComplexVector e0(2);
    e0 << 1.0, 0.0;
    const EncodedOperand basis = encode_vector(e0, "S1");
    CHECK(basis.scale == doctest::Approx(1.0));
    CHECK(operand_state(basis).amplitude(std::uint64_t{0}) == Complex{1.0, 0.0});

    ComplexVector v(2);
    v << 3.0, 4.0;
    const EncodedOperand enc = encode_vector(v, "S1");
    CHECK(enc.scale == doctest::Approx(0.2));
    const StateVector state = operand_state(enc);
    CHECK(std::abs(state.amplitude(std::uint64_t{0}) - Complex{0.6, 0.0}) < 1e-15);
    CHECK(std::abs(state.amplitude(std::uint64_t{1}) - Complex{0.8, 0.0}) < 1e-15);

    ComplexVector ones = ComplexVector::Constant(4, Complex{1.0, 0.0});
    const EncodedOperand uniform = encode_vector(ones, "S1");
    CHECK(uniform.scale == doctest::Approx(0.5));
    const StateVector ustate = operand_state(uniform);
    for (std::uint64_t k = 0; k < 4; ++k) {
        CHECK(std::abs(ustate.amplitude(k) - Complex{0.5, 0.0}) < 1e-15);
    }

    CHECK_THROWS_AS(encode_vector(ComplexVector::Zero(4), "S1"), DimensionError);
}

TEST_CASE("encode_matrix examples")
{
    const EncodedOperand identity =
        encode_matrix(ComplexMatrix::Identity(2, 2), "R1", "C1");
    CHECK(identity.scale == doctest::Approx(1.0 / std::sqrt(2.0)));

    ComplexMatrix a1(2, 2);
    a1 << 0.4, 0.4, 0.2, 0.8;
    const EncodedOperand enc = encode_matrix(a1, "R1", "C1");
    CHECK(enc.scale == doctest::Approx(1.0)); // already normalized
    const StateVector state = operand_state(enc);
    CHECK(std::abs(state.amplitude({{"R1", 0}, {"C1", 0}}) - Complex{0.4, 0.0}) < 1e-15);
    CHECK(std::abs(state.amplitude({{"R1", 0}, {"C1", 1}}) - Complex{0.4, 0.0}) < 1e-15);
    CHECK(std::abs(state.amplitude({{"R1", 1}, {"C1", 0}}) - Complex{0.2, 0.0}) < 1e-15);
    CHECK(std::abs(state.amplitude({{"R1", 1}, {"C1", 1}}) - Complex{0.8, 0.0}) < 1e-15);

    ComplexMatrix a2(2, 2);
    a2 << 0.4, 0.2, 0.4, 0.8;
    CHECK(encode_matrix(a2, "R2", "C2").scale == doctest::Approx(1.0));

    CHECK_THROWS_AS(encode_matrix(ComplexMatrix::Zero(2, 2), "R1", "C1"), DimensionError);
}

TEST_CASE("encode_matrix_with_slack")
{
    ComplexMatrix unit(2, 2);
    unit << 1.0, 0.0, 0.0, 0.0; // Frobenius norm 1
    const double c = std::sqrt(0.5);
    const EncodedOperand half = encode_matrix_with_slack(unit, c, "R1", "C1", "D1");
    CHECK(half.slack == doctest::Approx(std::sqrt(0.5)));

    const EncodedOperand pure =
        encode_matrix_with_slack(ComplexMatrix::Zero(2, 2), 0.5, "R1", "C1", "D1");
    CHECK(pure.slack == doctest::Approx(1.0));
    const StateVector slack_state = operand_state(pure);
    CHECK(std::abs(slack_state.amplitude({{"R1", 0}, {"C1", 0}, {"D1", 1}}) -
                   Complex{1.0, 0.0}) < 1e-15);

    ComplexMatrix two(2, 2);
    two << 2.0, 0.0, 0.0, 0.0;
    const EncodedOperand scaled = encode_matrix_with_slack(two, 0.4, "R1", "C1", "D1");
    CHECK(scaled.slack == doctest::Approx(0.6));

    CHECK_THROWS_AS(encode_matrix_with_slack(two, 0.6, "R1", "C1", "D1"), DimensionError);
    CHECK_THROWS_AS(encode_matrix_with_slack(two, 0.0, "R1", "C1", "D1"), DimensionError);
}

TEST_CASE("encoded states are normalized")
{
    std::mt19937_64 eng(808);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = test::random_complex_matrix(4, 2, eng);
        CHECK(std::abs(operand_state(encode_matrix(m, "R", "C")).norm() - 1.0) < 1e-12);
        CHECK(std::abs(operand_state(encode_matrix_with_slack(m, 0.3 / m.norm(), "R", "C",
                                                              "D"))
                           .norm() -
                       1.0) < 1e-12);
    }
}

TEST_CASE("padding to powers of two")
{
    CHECK(next_power_of_two(1) == 1);
    CHECK(next_power_of_two(3) == 4);
    CHECK(next_power_of_two(8) == 8);
    CHECK(log2_exact(8) == 3);
    CHECK_THROWS_AS(log2_exact(6), DimensionError);

    ComplexVector v(3);
    v << 1.0, 2.0, 2.0;
    const EncodedOperand enc = encode_vector(v, "S1");
    CHECK(enc.padded.rows() == 4);
    CHECK(enc.padded(3, 0) == Complex{0.0, 0.0});
    const StateVector state = operand_state(enc);
    CHECK(state.layout().width("S1") == 2);
    CHECK(std::abs(state.amplitude(std::uint64_t{0}) - Complex{1.0 / 3.0, 0.0}) < 1e-15);
    CHECK(state.amplitude(std::uint64_t{3}) == Complex{0.0, 0.0});
}
