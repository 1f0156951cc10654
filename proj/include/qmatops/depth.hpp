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

#include <map>
#include <string>
#include <vector>

#include "qmatops/gates.hpp"

namespace qmatops {

/// Circuit cost summary. Depth counts moments where Toffoli-class gates
/// (any control polarity) and all 1-2 qubit gates cost one step each;
/// measurement and classical post-processing are excluded.
struct DepthReport {
    int depth = 0;
    int width = 0; // qubits including work ancillas added by expansion
    std::map<std::string, int> counts;
    Parallelism convention = Parallelism::SharedControl;

    int total_gates() const;
    int count(const std::string& kind) const;
};

/// Circuit with every wide controlled gate rewritten into native units
/// (X, H, SWAP, CNOT, Toffoli, Fredkin). Controlled gates with three or
/// more controls go through the Toffoli ladder; each expansion gets its
/// own fresh work register so independent ladders can overlap in time.
struct ExpandedCircuit {
    RegisterLayout layout;
    std::vector<Gate> gates;
};

ExpandedCircuit expand_for_analysis(const Circuit& circuit);

DepthReport analyze(const Circuit& circuit,
                    Parallelism convention = Parallelism::SharedControl);

struct ScalingRow {
    int size = 0; // register width in qubits (n for inner/add, k for matmul)
    int depth = 0;
    int toffoli_count = 0;
    int width = 0;
};

enum class ProtocolKind { InnerProduct, Addition, Multiplication };

/// One analyzed row per size. Sizes are register widths in qubits; the
/// encoded dimension is 2^size. For addition rows use n = m = size, for
/// multiplication n = k = m = size.
std::vector<ScalingRow> scaling_report(ProtocolKind protocol, const std::vector<int>& sizes,
                                       Parallelism convention = Parallelism::SharedControl);

} // namespace qmatops
