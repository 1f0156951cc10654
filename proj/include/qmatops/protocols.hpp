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
#include <utility>

#include "qmatops/encoding.hpp"
#include "qmatops/gates.hpp"
#include "qmatops/sampling.hpp"

namespace qmatops {

struct RunMode {
    enum class Kind { Exact, Shots };
    Kind kind = Kind::Exact;
    long long shots = 0;
    std::uint64_t seed = kDefaultSeed;

    static RunMode exact() { return {}; }
    static RunMode with_shots(long long shots, std::uint64_t seed = kDefaultSeed)
    {
        return {Kind::Shots, shots, seed};
    }
};

/// Encoding factors carried along with every result so the classical
/// recovery stays auditable. `coupling` is the effective weight in front
/// of the recovered quantity: c1*c2 for the inner product and the matrix
/// product, c1*s2 (= c2*s1 after calibration) for addition.
struct ScaleInfo {
    double c1 = 1.0;
    double c2 = 1.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double coupling = 1.0;
};

struct ProtocolResult {
    /// Exact probability of reading the success flag, from projection.
    double success_probability = 0.0;
    /// State conditional on the flag ancilla reading 1; absent at
    /// probability zero.
    std::optional<StateVector> post_state;
    /// De-scaled classical result (1x1 for the inner product). Zero and
    /// flagged via zero_outcome when the embedded quantity vanished; in
    /// shots mode the inner product carries only the magnitude estimate.
    ComplexMatrix recovered;
    bool zero_outcome = false;
    /// Unit phase of the recovered scalar (inner product, exact mode).
    Complex phase{0.0, 0.0};
    /// Normalization constant of the embedded result: the Euclidean norm
    /// of the scaled quantity the flagged amplitudes carry.
    double g = 0.0;
    ScaleInfo scales;
    std::optional<ShotRecord> shot_record;
};

/// Registers: (S1:n, S2:n, A:n, B1:1, B2:1). Stages w1..w4: pairwise
/// agreement marks into A, flag of A = |1...1> into B1, a Hadamard layer
/// on S1,S2,A, and the final flag of the all-zero pattern into B2.
Circuit build_inner_product_circuit(int n);

/// Registers: (R1:n, C1:m, D1:1, R2:n, C2:m, D2:1, B1:1, B2:1). Stages:
/// cross-slack marking into B1, the D1-controlled register swap, Hadamards
/// on D1 and D2, and the final flag into B2. Depth under the
/// shared-control convention is independent of n and m.
Circuit build_addition_circuit(int n, int m);

/// Registers: (R1:n, C1:k, R2:k, C2:m, A:k, B1:1, B2:1); same stage
/// structure as the inner product with the agreement marks on (C1, R2).
Circuit build_multiplication_circuit(int n, int k, int m);

/// Initial state (stage 0) for each protocol: encoded operands tensored
/// with zeroed ancillas.
StateVector inner_product_initial_state(const EncodedOperand& v1, const EncodedOperand& v2,
                                        int qubit_cap = kDefaultQubitCap);
StateVector addition_initial_state(const EncodedOperand& a1, const EncodedOperand& a2,
                                   int qubit_cap = kDefaultQubitCap);
StateVector multiplication_initial_state(const EncodedOperand& a1, const EncodedOperand& a2,
                                         int qubit_cap = kDefaultQubitCap);

/// Computes the bilinear form sum_k v1_k * v2_k (no conjugation) through
/// the circuit; recovered is de-scaled by 1/(c1*c2). Probability formula:
/// |c1 c2 sum|^2 / 2^(3n).
ProtocolResult run_inner_product(const ComplexVector& v1, const ComplexVector& v2,
                                 const RunMode& mode = RunMode::exact(),
                                 int qubit_cap = kDefaultQubitCap);

/// Convenience wrapper that conjugates v2 on entry, recovering the
/// Hermitian inner product <v2|v1>.
ProtocolResult run_inner_product_hermitian(const ComplexVector& v1, const ComplexVector& v2,
                                           const RunMode& mode = RunMode::exact(),
                                           int qubit_cap = kDefaultQubitCap);

/// Plain (unweighted) sum A1 + A2. `slack_target` in (0, 1) fixes the
/// slack amplitude of the second operand; the first operand's scale is
/// calibrated so both branches carry equal weight (c1*s2 = c2*s1), which
/// makes the recovered sum unweighted even for unequal Frobenius norms.
ProtocolResult run_addition(const ComplexMatrix& a1, const ComplexMatrix& a2,
                            double slack_target = kDefaultSlackTarget,
                            const RunMode& mode = RunMode::exact(),
                            int qubit_cap = kDefaultQubitCap);

/// Caller-chosen scales: recovers the weighted combination
/// s2*c1*A1 + s1*c2*A2 with s_i = sqrt(1 - c_i^2 |A_i|_F^2).
ProtocolResult run_addition_weighted(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                     double c1, double c2,
                                     const RunMode& mode = RunMode::exact(),
                                     int qubit_cap = kDefaultQubitCap);

/// Product A1 * A2, de-scaled by 1/(c1*c2). Probability formula:
/// G^2 / 2^(3k) with G = c1 c2 |A1 A2|_F.
ProtocolResult run_multiplication(const ComplexMatrix& a1, const ComplexMatrix& a2,
                                  const RunMode& mode = RunMode::exact(),
                                  int qubit_cap = kDefaultQubitCap);

/// Block embedding that recasts addition as multiplication:
///   A1~ = [A1 I; 0 0]   (2N x (M+N)),
///   A2~ = [I 0; A2 0]   ((M+N) x 2M),
/// so A1~ * A2~ carries A1 + A2 in its top-left N x M block.
std::pair<ComplexMatrix, ComplexMatrix>
embed_addition_as_multiplication(const ComplexMatrix& a1, const ComplexMatrix& a2);

/// State after a named point of the pipeline: stage 0 returns the input,
/// stages 1-4 apply the corresponding prefix, stage 5 post-selects the B2
/// flag (throws ProtocolError at probability zero).
StateVector inspect_stage(const Circuit& circuit, int stage, const StateVector& initial);

} // namespace qmatops
