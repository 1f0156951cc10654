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

#include "qmatops/types.hpp"

namespace qmatops {

// Classical reference results, written as plain loops in double precision
// so the ground truth stays easy to audit.

/// Sum of elementwise products with no conjugation.
Complex oracle_bilinear(const ComplexVector& v1, const ComplexVector& v2);

/// Conjugates v2, then forms the bilinear sum (the Hermitian inner product
/// <v2|v1> for callers who want it).
Complex oracle_hermitian_inner(const ComplexVector& v1, const ComplexVector& v2);

ComplexMatrix oracle_add(const ComplexMatrix& a1, const ComplexMatrix& a2);
ComplexMatrix oracle_matmul(const ComplexMatrix& a1, const ComplexMatrix& a2);

struct ComparisonReport {
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    bool passed = false;
    double tolerance = 0.0;
};

/// Elementwise comparison. Relative error uses the reference magnitude as
/// denominator, falling back to absolute error below `floor`.
ComparisonReport compare(const ComplexMatrix& result, const ComplexMatrix& reference,
                         double tolerance, double floor = 1e-9);

} // namespace qmatops
