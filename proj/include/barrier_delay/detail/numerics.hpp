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

#ifndef BARRIER_DELAY_DETAIL_NUMERICS_HPP
#define BARRIER_DELAY_DETAIL_NUMERICS_HPP

#include <cmath>
#include <cstddef>
#include <utility>

namespace barrier_delay::detail
{

/// sin(x)/x with a series branch near zero.
inline double sinc(double x) noexcept
{
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

/// Golden-section search for the maximiser of f on [lo, hi]; f must be
/// unimodal there. Returns (argmax, max).
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol)
{
    constexpr double inv_phi = 0.6180339887498948482;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    const double x = 0.5 * (lo + hi);
    return {x, f(x)};
}

/// Evenly spaced points lo..hi inclusive.
inline double linspace_at(double lo, double hi, std::size_t n, std::size_t i) noexcept
{
    if (n < 2)
        return lo;
    if (i + 1 == n)
        return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

} // namespace barrier_delay::detail

#endif
