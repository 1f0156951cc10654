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
#include <random>

#include "qmatops/state.hpp"

namespace qmatops {

/// Deterministic shot source: std::mt19937_64 with doubles drawn from the
/// top 53 bits, so shot sequences are identical across platforms and
/// standard libraries for a given seed.
class ShotRng {
public:
    explicit ShotRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

struct ShotRecord {
    long long shots = 0;
    long long successes = 0;
    double estimated_p = 0.0;
    double std_error = 0.0; // binomial standard error of estimated_p
    std::uint64_t seed = 0;
};

/// Exact marginal distribution of one register (2^width probabilities).
std::vector<double> register_marginal(const StateVector& state, const std::string& name);

/// Draws `shots` outcomes of the register from its exact marginal via
/// inverse-CDF sampling; deterministic given the seed. A shot counts as a
/// success when the register reads `success_value` (default: all ones,
/// i.e. |1> for one-qubit flags).
ShotRecord sample_measurement(const StateVector& state, const std::string& register_name,
                              long long shots, std::uint64_t seed,
                              std::optional<std::uint64_t> success_value = std::nullopt);

/// 1 - (1-p)^L: the chance at least one of L independent trials succeeds.
/// Computed via expm1/log1p so tiny p and huge L do not underflow.
double amplification_probability(double p, long long trials);

/// Smallest L with amplification_probability(p, L) >= target.
/// Throws SamplingError for p = 0 (the target is unreachable).
long long required_trials(double p, double target);

} // namespace qmatops
