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

#include "qmatops/oracle.hpp"

#include <cmath>

namespace qmatops {

Complex oracle_bilinear(const ComplexVector& v1, const ComplexVector& v2)
{
    if (v1.size() != v2.size()) {
        throw DimensionError("bilinear product needs vectors of equal length");
    }
    Complex sum{0.0, 0.0};
    for (Eigen::Index k = 0; k < v1.size(); ++k) {
        sum += v1[k] * v2[k];
    }
    return sum;
}

Complex oracle_hermitian_inner(const ComplexVector& v1, const ComplexVector& v2)
{
    return oracle_bilinear(v1, v2.conjugate());
}

ComplexMatrix oracle_add(const ComplexMatrix& a1, const ComplexMatrix& a2)
{
    if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) {
        throw DimensionError("matrix addition needs equal dimensions");
    }
    ComplexMatrix sum(a1.rows(), a1.cols());
    for (Eigen::Index j = 0; j < a1.rows(); ++j) {
        for (Eigen::Index l = 0; l < a1.cols(); ++l) {
            sum(j, l) = a1(j, l) + a2(j, l);
        }
    }
    return sum;
}

ComplexMatrix oracle_matmul(const ComplexMatrix& a1, const ComplexMatrix& a2)
{
    if (a1.cols() != a2.rows()) {
        throw DimensionError("matrix product needs matching inner dimensions");
    }
    ComplexMatrix product = ComplexMatrix::Zero(a1.rows(), a2.cols());
    for (Eigen::Index j = 0; j < a1.rows(); ++j) {
        for (Eigen::Index l = 0; l < a2.cols(); ++l) {
            Complex acc{0.0, 0.0};
            for (Eigen::Index k = 0; k < a1.cols(); ++k) {
                acc += a1(j, k) * a2(k, l);
            }
            product(j, l) = acc;
        }
    }
    return product;
}

ComparisonReport compare(const ComplexMatrix& result, const ComplexMatrix& reference,
                         double tolerance, double floor)
{
    if (result.rows() != reference.rows() || result.cols() != reference.cols()) {
        throw DimensionError("comparison needs equal shapes");
    }
    ComparisonReport report;
    report.tolerance = tolerance;
    for (Eigen::Index j = 0; j < result.rows(); ++j) {
        for (Eigen::Index l = 0; l < result.cols(); ++l) {
            const double abs_err = std::abs(result(j, l) - reference(j, l));
            const double ref_mag = std::abs(reference(j, l));
            const double rel_err = ref_mag >= floor ? abs_err / ref_mag : abs_err;
            report.max_abs_error = std::max(report.max_abs_error, abs_err);
            report.max_rel_error = std::max(report.max_rel_error, rel_err);
        }
    }
    report.passed = report.max_rel_error <= tolerance;
    return report;
}

} // namespace qmatops
