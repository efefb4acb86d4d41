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

#ifndef BARRIER_DELAY_AMPLITUDES_HPP
#define BARRIER_DELAY_AMPLITUDES_HPP

#include <barrier_delay/barrier.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

namespace barrier_delay
{

using complex = std::complex<double>;

/// g1 exp(-i phi1) = (1 - k2/k1) cos(k0 a) / 2 - (i/2) (k2/k0 - k0/k1) sin(k0 a)
inline complex complex_g1(const WaveNumbers& wn, double a) noexcept
{
    const double theta = wn.k0 * a;
    return {0.5 * (1.0 - wn.k2 / wn.k1) * std::cos(theta),
            -0.5 * (wn.k2 / wn.k0 - wn.k0 / wn.k1) * std::sin(theta)};
}

/// g2 exp(-i phi2) = (1 + k2/k1) cos(k0 a) / 2 - (i/2) (k2/k0 + k0/k1) sin(k0 a)
///
/// Never zero: the imaginary coefficient is strictly positive, so the two
/// parts cannot vanish together.
inline complex complex_g2(const WaveNumbers& wn, double a) noexcept
{
    const double theta = wn.k0 * a;
    return {0.5 * (1.0 + wn.k2 / wn.k1) * std::cos(theta),
            -0.5 * (wn.k2 / wn.k0 + wn.k0 / wn.k1) * std::sin(theta)};
}

/// Relative threshold g1 < g1_guard * g2 under which r is reported as exactly
/// zero and phi1 as undefined.
inline constexpr double g1_guard = 1e-14;

/// -arg(z) folded into (-pi, pi].
inline double phase_of(complex z) noexcept
{
    const double p = -std::arg(z);
    return p <= -std::numbers::pi ? p + 2.0 * std::numbers::pi : p;
}

struct ScatteringAmplitudes
{
    complex r;
    complex t;
    double g1 = 0.0;
    std::optional<double> phi1; ///< empty when g1 vanishes
    double g2 = 0.0;
    double phi2 = 0.0;
    double T = 0.0;  ///< |t|^2, may exceed 1
    double Tc = 0.0; ///< (k2/k1) |t|^2, never exceeds 1
};

/// Amplitudes from precomputed wave numbers. Phases are minus the principal
/// argument of complex_g1/complex_g2, i.e. in (-pi, pi].
inline ScatteringAmplitudes amplitudes(const WaveNumbers& wn, double a)
{
    const complex G1 = complex_g1(wn, a);
    const complex G2 = complex_g2(wn, a);

    ScatteringAmplitudes out;
    out.g2 = std::abs(G2);
    out.phi2 = phase_of(G2);
    out.g1 = std::abs(G1);
    out.t = 1.0 / G2;
    if (out.g1 < g1_guard * out.g2) {
        out.r = complex{0.0, 0.0};
    } else {
        out.phi1 = phase_of(G1);
        out.r = G1 / G2;
    }
    out.T = std::norm(out.t);
    out.Tc = wn.k2 / wn.k1 * out.T;
    return out;
}

inline ScatteringAmplitudes amplitudes(const BarrierConfig& cfg, double E)
{
    return amplitudes(wave_numbers(cfg, E), cfg.a);
}

/// Closed-form |t|^2:
/// 4 k0^2 k1^2 / [k0^2 (k1+k2)^2 + (k1^2-k0^2)(k2^2-k0^2) sin^2(k0 a)]
inline double transmission_probability(const WaveNumbers& wn, double a) noexcept
{
    const double k0s = wn.k0 * wn.k0;
    const double s = std::sin(wn.k0 * a);
    const double sum = wn.k1 + wn.k2;
    return 4.0 * k0s * wn.k1 * wn.k1 /
           (k0s * sum * sum + (wn.k1 * wn.k1 - k0s) * (wn.k2 * wn.k2 - k0s) * s * s);
}

/// Peak transmission probability, reached at k0 a = m pi.
inline double transmission_probability_max(const WaveNumbers& wn) noexcept
{
    const double q = 1.0 + wn.k2 / wn.k1;
    return 4.0 / (q * q);
}

/// Right-hand sides of the tangent relations for phi1 and phi2, as plain
/// functions of the wave numbers. k1 may be given a negative sign to probe
/// the phi1 <-> phi2 exchange.
struct PhaseTangents
{
    double tan_phi1 = 0.0;
    double tan_phi2 = 0.0;
};

inline PhaseTangents phase_tangents(double k0, double k1, double k2, double a) noexcept
{
    const double tn = std::tan(k0 * a);
    return {(1.0 / k0 - k0 / (k1 * k2)) / (1.0 / k2 - 1.0 / k1) * tn,
            (1.0 / k0 + k0 / (k1 * k2)) / (1.0 / k2 + 1.0 / k1) * tn};
}

} // namespace barrier_delay

#endif
