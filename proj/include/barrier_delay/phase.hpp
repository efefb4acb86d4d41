/*
   Copyright 2026, The barrier-delay authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BARRIER_DELAY_PHASE_HPP
#define BARRIER_DELAY_PHASE_HPP

#include <barrier_delay/errors.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace barrier_delay
{

/// Reduce an angle difference to [-pi, pi).
inline double wrap_to_pi(double d) noexcept
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    d = std::fmod(d + std::numbers::pi, two_pi);
    if (d < 0.0)
        d += two_pi;
    return d - std::numbers::pi;
}

struct UnwrapResult
{
    std::vector<double> phases;
    /// Indices i for which the jump samples[i-1] -> samples[i] was within
    /// tolerance of pi, so the branch choice is arbitrary.
    std::vector<std::size_t> ambiguous;
};

/// Nearest-branch continuation that records ambiguous jumps instead of
/// throwing. Each output differs from its input by a multiple of 2 pi.
inline UnwrapResult unwrap_phase_flagged(std::span<const double> samples,
                                         double ambiguity_tol = 1e-6)
{
    UnwrapResult out;
    out.phases.reserve(samples.size());
    double offset = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i > 0) {
            const double raw = samples[i] - samples[i - 1];
            const double step = wrap_to_pi(raw);
            if (std::abs(std::abs(step) - std::numbers::pi) < ambiguity_tol)
                out.ambiguous.push_back(i);
            // raw - step is the multiple of 2 pi to remove
            offset -= std::round((raw - step) / (2.0 * std::numbers::pi)) * 2.0 * std::numbers::pi;
        }
        out.phases.push_back(samples[i] + offset);
    }
    return out;
}

/// Continuous phase from principal-value samples. Throws WrapAmbiguityError
/// when a consecutive jump is ~pi; the grid must then be refined.
inline std::vector<double> unwrap_phase(std::span<const double> samples, double ambiguity_tol = 1e-6)
{
    auto res = unwrap_phase_flagged(samples, ambiguity_tol);
    if (!res.ambiguous.empty()) {
        const auto i = res.ambiguous.front();
        throw WrapAmbiguityError("phase jump of ~pi between samples " + std::to_string(i - 1) +
                                     " and " + std::to_string(i) + "; refine the grid",
                                 i);
    }
    return std::move(res.phases);
}

} // namespace barrier_delay

#endif
