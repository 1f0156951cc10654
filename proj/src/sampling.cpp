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

#include "qmatops/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace qmatops {

std::vector<double> register_marginal(const StateVector& state, const std::string& name)
{
    const RegisterLayout& layout = state.layout();
    const int w = layout.width(name); // throws for unknown registers
    if (w > 30) {
        throw SamplingError("register '" + name + "' too wide to tabulate");
    }
    std::vector<double> marginal(std::size_t{1} << w, 0.0);
    const auto& amps = state.amplitudes();
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        marginal[layout.register_value(name, static_cast<std::uint64_t>(i))] +=
            std::norm(amps[i]);
    }
    return marginal;
}

ShotRecord sample_measurement(const StateVector& state, const std::string& register_name,
                              long long shots, std::uint64_t seed,
                              std::optional<std::uint64_t> success_value)
{
    if (shots < 1) {
        throw SamplingError("shot count must be at least 1");
    }
    const std::vector<double> marginal = register_marginal(state, register_name);
    const std::uint64_t target = success_value.value_or(marginal.size() - 1);
    if (target >= marginal.size()) {
        throw SamplingError("success value out of range for register '" + register_name +
                            "'");
    }

    std::vector<double> cumulative(marginal.size());
    double acc = 0.0;
    for (std::size_t v = 0; v < marginal.size(); ++v) {
        acc += marginal[v];
        cumulative[v] = acc;
    }
    cumulative.back() = std::max(cumulative.back(), 1.0);

    ShotRng rng(seed);
    long long successes = 0;
    for (long long s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto outcome =
            static_cast<std::uint64_t>(std::distance(cumulative.begin(), it));
        if (outcome == target) {
            ++successes;
        }
    }

    ShotRecord record;
    record.shots = shots;
    record.successes = successes;
    record.estimated_p = static_cast<double>(successes) / static_cast<double>(shots);
    record.std_error =
        std::sqrt(record.estimated_p * (1.0 - record.estimated_p) / static_cast<double>(shots));
    record.seed = seed;
    return record;
}

double amplification_probability(double p, long long trials)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw SamplingError("probability must lie in [0, 1]");
    }
    if (trials < 1) {
        throw SamplingError("trial count must be at least 1");
    }
    if (p == 1.0) {
        return 1.0;
    }
    return -std::expm1(static_cast<double>(trials) * std::log1p(-p));
}

long long required_trials(double p, double target)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw SamplingError("probability must lie in [0, 1]");
    }
    if (!(target > 0.0 && target < 1.0)) {
        throw SamplingError("target must lie in (0, 1)");
    }
    if (p == 0.0) {
        throw SamplingError("target unreachable with zero success probability");
    }
    if (p == 1.0) {
        return 1;
    }
    const double estimate = std::log1p(-target) / std::log1p(-p);
    auto trials = static_cast<long long>(std::ceil(estimate));
    trials = std::max<long long>(trials, 1);
    while (trials > 1 && amplification_probability(p, trials - 1) >= target) {
        --trials;
    }
    while (amplification_probability(p, trials) < target) {
        ++trials;
    }
    return trials;
}

} // namespace qmatops
