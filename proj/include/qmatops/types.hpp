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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qmatops {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Norm drift allowed after a single unitary application.
inline constexpr double kNormTolerance = 1e-10;

/// Ceiling on simulated qubits unless the caller raises it explicitly.
inline constexpr int kDefaultQubitCap = 26;

/// Success probabilities at or below this threshold are reported as the
/// distinguished zero-sum outcome (flagged amplitudes of ~1e-12 or less).
inline constexpr double kZeroOutcomeProbability = 1e-24;

/// Fixed default seed so runs without --seed are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Default slack amplitude targeted by the addition encoding (1/sqrt(2)).
inline constexpr double kDefaultSlackTarget = 0.70710678118654752440;

class LayoutError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class QubitCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SamplingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace qmatops
