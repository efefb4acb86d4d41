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

#ifndef BARRIER_DELAY_DELAYS_HPP
#define BARRIER_DELAY_DELAYS_HPP

#include <barrier_delay/amplitudes.hpp>
#include <barrier_delay/barrier.hpp>
#include <barrier_delay/detail/numerics.hpp>
#include <barrier_delay/errors.hpp>
#include <barrier_delay/phase.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace barrier_delay
{

struct ClassicalTime
{
    double v_c = 0.0;   ///< hbar k0 / mu
    double tau_c = 0.0; ///< a / v_c
};

inline ClassicalTime classical_time(const BarrierConfig& cfg, const WaveNumbers& wn) noexcept
{
    const double v = cfg.hbar * wn.k0 / cfg.mu;
    return {v, cfg.a / v};
}

inline ClassicalTime classical_time(const BarrierConfig& cfg, double E)
{
    return classical_time(cfg, wave_numbers(cfg, E));
}

// Delays in units of tau_c. These stay finite at a = 0, where tau_c itself
// vanishes.

namespace detail
{

struct DelayTerms
{
    double q;     // k2/k1
    double sinc2; // sin(2 k0 a)/(2 k0 a)
    double mix;   // (1 - k0^2/k1^2)(k2/k0 - k0/k2)
    double c2;    // cos^2(k0 a)
    double s2;    // sin^2(k0 a)
};

inline DelayTerms delay_terms(const WaveNumbers& wn, double a) noexcept
{
    const double theta = wn.k0 * a;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {wn.k2 / wn.k1, sinc(2.0 * theta),
            (1.0 - (wn.k0 / wn.k1) * (wn.k0 / wn.k1)) * (wn.k2 / wn.k0 - wn.k0 / wn.k2), c * c, s * s};
}

} // namespace detail

/// g2^2 = (1+k2/k1)^2 cos^2(k0 a)/4 + (k2/k0+k0/k1)^2 sin^2(k0 a)/4
inline double g2_squared(const WaveNumbers& wn, double a) noexcept
{
    const auto d = detail::delay_terms(wn, a);
    const double u = 1.0 + d.q;
    const double v = wn.k2 / wn.k0 + wn.k0 / wn.k1;
    return 0.25 * (u * u * d.c2 + v * v * d.s2);
}

/// g1^2 = (1-k2/k1)^2 cos^2(k0 a)/4 + (k2/k0-k0/k1)^2 sin^2(k0 a)/4
inline double g1_squared(const WaveNumbers& wn, double a) noexcept
{
    const auto d = detail::delay_terms(wn, a);
    const double u = 1.0 - d.q;
    const double v = wn.k2 / wn.k0 - wn.k0 / wn.k1;
    return 0.25 * (u * u * d.c2 + v * v * d.s2);
}

/// True when g1 is below the guard, so phi1 and tau_1 are undefined.
inline bool g1_vanishes(const WaveNumbers& wn, double a) noexcept
{
    return g1_squared(wn, a) < g1_guard * g1_guard * g2_squared(wn, a);
}

/// tau_t / tau_c.
inline double tau_t_over_tau_c(const WaveNumbers& wn, double a) noexcept
{
    const auto d = detail::delay_terms(wn, a);
    return (1.0 + d.q) * (wn.k2 / wn.k0 + wn.k0 / wn.k1 - d.mix * d.sinc2) /
           (4.0 * g2_squared(wn, a));
}

/// tau_1 / tau_c, empty where g1 vanishes.
inline std::optional<double> tau_1_over_tau_c(const WaveNumbers& wn, double a) noexcept
{
    if (g1_vanishes(wn, a))
        return std::nullopt;
    const auto d = detail::delay_terms(wn, a);
    return -(1.0 - d.q) * (wn.k2 / wn.k0 - wn.k0 / wn.k1 - d.mix * d.sinc2) /
           (4.0 * g1_squared(wn, a));
}

/// Transmission group delay hbar d(phi2)/dE.
inline double tau_t_analytic(const BarrierConfig& cfg, double E)
{
    const auto wn = wave_numbers(cfg, E);
    return classical_time(cfg, wn).tau_c * tau_t_over_tau_c(wn, cfg.a);
}

/// Reflection excess delay -hbar d(phi1)/dE. Empty where g1 vanishes.
inline std::optional<double> tau_1_analytic(const BarrierConfig& cfg, double E)
{
    const auto wn = wave_numbers(cfg, E);
    const auto rel = tau_1_over_tau_c(wn, cfg.a);
    if (!rel)
        return std::nullopt;
    return classical_time(cfg, wn).tau_c * *rel;
}

/// Reflection group delay tau_t + tau_1. Empty where tau_1 is undefined.
inline std::optional<double> tau_r(const BarrierConfig& cfg, double E)
{
    const auto t1 = tau_1_analytic(cfg, E);
    if (!t1)
        return std::nullopt;
    return tau_t_analytic(cfg, E) + *t1;
}

/// Special values at and between resonances, in units of tau_c.
namespace closed_form
{

/// tau_t at k0 a = m pi: (k1 k2 + k0^2) / (k0 (k1 + k2)).
inline double tau_t_at_resonance(const WaveNumbers& wn) noexcept
{
    return (wn.k1 * wn.k2 + wn.k0 * wn.k0) / (wn.k0 * (wn.k1 + wn.k2));
}

/// tau_t at k0 a = (m + 1/2) pi: (1 + k2/k1) / (k2/k0 + k0/k1).
inline double tau_t_at_antiresonance(const WaveNumbers& wn) noexcept
{
    return (1.0 + wn.k2 / wn.k1) / (wn.k2 / wn.k0 + wn.k0 / wn.k1);
}

/// tau_1 at k0 a = m pi: -(k1 k2 - k0^2) / (k0 (k1 - k2)). Undefined for k1 = k2.
inline std::optional<double> tau_1_at_resonance(const WaveNumbers& wn) noexcept
{
    if (wn.k1 == wn.k2)
        return std::nullopt;
    return -(wn.k1 * wn.k2 - wn.k0 * wn.k0) / (wn.k0 * (wn.k1 - wn.k2));
}

/// tau_1 at k0 a = (m + 1/2) pi: -(1 - k2/k1) / (k2/k0 - k0/k1).
inline double tau_1_at_antiresonance(const WaveNumbers& wn) noexcept
{
    return -(1.0 - wn.k2 / wn.k1) / (wn.k2 / wn.k0 - wn.k0 / wn.k1);
}

/// Near-resonance form of tau_1 with the sin(2 k0 a) term dropped.
inline std::optional<double> tau_1_near_resonance(const WaveNumbers& wn, double a) noexcept
{
    if (g1_vanishes(wn, a))
        return std::nullopt;
    return -(1.0 - wn.k2 / wn.k1) * (wn.k2 / wn.k0 - wn.k0 / wn.k1) / (4.0 * g1_squared(wn, a));
}

} // namespace closed_form

// ---------------------------------------------------------------------------
// Finite-difference cross-check

enum class DelayChannel
{
    transmission, ///< hbar d(phi2)/dE
    reflection,   ///< hbar d(phi2 - phi1)/dE
    tau_1         ///< -hbar d(phi1)/dE
};

inline const char* to_string(DelayChannel ch) noexcept
{
    switch (ch) {
    case DelayChannel::transmission:
        return "transmission";
    case DelayChannel::reflection:
        return "reflection";
    case DelayChannel::tau_1:
        return "tau_1";
    }
    return "?";
}

struct NumericDiffOptions
{
    double rel_step = 1e-6;  ///< h = max(rel_step |E|, abs_step |V0|)
    double abs_step = 1e-9;
    int richardson_levels = 1;
    double max_stencil_jump = std::numbers::pi / 2.0;
};

namespace detail
{

// Principal value of the phase whose energy derivative (times hbar) is the
// requested delay.
inline double channel_phase(const BarrierConfig& cfg, double E, DelayChannel ch)
{
    const auto wn = wave_numbers(cfg, E);
    const complex G2 = complex_g2(wn, cfg.a);
    if (ch == DelayChannel::transmission)
        return phase_of(G2);
    if (g1_vanishes(wn, cfg.a))
        throw UndefinedError("phi1 undefined (g1 = 0) inside the difference stencil");
    const complex G1 = complex_g1(wn, cfg.a);
    if (ch == DelayChannel::tau_1)
        return std::arg(G1);
    return std::arg(G1 * std::conj(G2));
}

} // namespace detail

/// hbar dphi/dE by central differences of the unwrapped phase, improved by
/// Richardson extrapolation over successive halvings of the step.
///
/// Throws DomainError when the stencil leaves the over-barrier domain,
/// PhaseWrapError when neighbouring stencil phases jump by more than
/// max_stencil_jump, and UndefinedError when phi1 is needed where g1 = 0.
inline double tau_numeric(const BarrierConfig& cfg, double E, DelayChannel channel,
                          const NumericDiffOptions& opts = {})
{
    cfg.validate();
    if (opts.richardson_levels < 0)
        throw ConfigError("richardson_levels must be >= 0");
    double h = std::max(opts.rel_step * std::abs(E), opts.abs_step * std::abs(cfg.V0));
    if (!(h > 0.0))
        throw ConfigError("finite-difference step must be positive");
    h = (E + h) - E;
    if (!is_over_barrier(cfg, E) || !is_over_barrier(cfg, E - h))
        throw DomainError("difference stencil leaves the over-barrier domain");

    const int levels = opts.richardson_levels;
    const std::size_t n = 2 * static_cast<std::size_t>(levels + 1) + 1;
    // energies in increasing order: E-h, E-h/2, ..., E, ..., E+h/2, E+h
    std::vector<double> energies(n);
    const std::size_t mid = static_cast<std::size_t>(levels) + 1;
    energies[mid] = E;
    for (int j = 0; j <= levels; ++j) {
        const double hj = std::ldexp(h, -j);
        energies[static_cast<std::size_t>(j)] = E - hj;
        energies[n - 1 - static_cast<std::size_t>(j)] = E + hj;
    }

    std::vector<double> phases(n);
    for (std::size_t i = 0; i < n; ++i)
        phases[i] = detail::channel_phase(cfg, energies[i], channel);
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(wrap_to_pi(phases[i] - phases[i - 1])) > opts.max_stencil_jump)
            throw PhaseWrapError(std::string("phase of the ") + to_string(channel) +
                                 " channel jumps by more than the stencil limit; "
                                 "the delay is not resolvable at this step");
    }
    const auto unwrapped = unwrap_phase_flagged(phases).phases;

    std::vector<std::vector<double>> tableau(static_cast<std::size_t>(levels) + 1);
    for (int j = 0; j <= levels; ++j) {
        const auto lo = static_cast<std::size_t>(j);
        const auto hi = n - 1 - lo;
        auto& row = tableau[lo];
        row.resize(lo + 1);
        row[0] = (unwrapped[hi] - unwrapped[lo]) / (energies[hi] - energies[lo]);
        double factor = 1.0;
        for (std::size_t k = 1; k <= lo; ++k) {
            factor *= 4.0;
            row[k] = (factor * row[k - 1] - tableau[lo - 1][k - 1]) / (factor - 1.0);
        }
    }
    return cfg.hbar * tableau.back().back();
}

// ---------------------------------------------------------------------------

struct DelayReport
{
    double E = 0.0;
    double v_c = 0.0;
    double tau_c = 0.0;
    double tau_t = 0.0;
    std::optional<double> tau_1;
    std::optional<double> tau_r;
    std::optional<double> tau_t_numeric;
    std::optional<double> tau_r_numeric;
};

inline DelayReport delay_report(const BarrierConfig& cfg, double E, const NumericDiffOptions& opts = {})
{
    const auto wn = wave_numbers(cfg, E);
    const auto ct = classical_time(cfg, wn);
    DelayReport rep;
    rep.E = E;
    rep.v_c = ct.v_c;
    rep.tau_c = ct.tau_c;
    rep.tau_t = ct.tau_c * tau_t_over_tau_c(wn, cfg.a);
    if (auto t1 = tau_1_over_tau_c(wn, cfg.a)) {
        rep.tau_1 = ct.tau_c * *t1;
        rep.tau_r = rep.tau_t + *rep.tau_1;
    }
    auto numeric = [&](DelayChannel ch) -> std::optional<double> {
        try {
            return tau_numeric(cfg, E, ch, opts);
        } catch (const DomainError&) {
        } catch (const PhaseWrapError&) {
        } catch (const UndefinedError&) {
        }
        return std::nullopt;
    };
    rep.tau_t_numeric = numeric(DelayChannel::transmission);
    if (rep.tau_r)
        rep.tau_r_numeric = numeric(DelayChannel::reflection);
    return rep;
}

// ---------------------------------------------------------------------------
// Resonance width and the packet-width restriction

/// k0 |k1 - k2| / sqrt((k1^2 - k0^2)(k2^2 - k0^2)), the sine of the resonance
/// half-width in units of k0 a. Zero for a symmetric barrier; it can exceed 1
/// when one side lies close to the barrier top, in which case no half-width
/// exists.
inline double half_width_sine(const WaveNumbers& wn) noexcept
{
    const double k0s = wn.k0 * wn.k0;
    return wn.k0 * std::abs(wn.k1 - wn.k2) / std::sqrt((wn.k1 * wn.k1 - k0s) * (wn.k2 * wn.k2 - k0s));
}

namespace detail
{

inline double checked_half_width_angle(const WaveNumbers& wn)
{
    if (std::abs(wn.k1 - wn.k2) <= 1e-14 * std::max(wn.k1, wn.k2))
        throw UndefinedError("k1 = k2: symmetric barrier has no reflection-delay peak width");
    const double x = half_width_sine(wn);
    if (x > 1.0)
        throw UndefinedError("resonance too broad: half-width sine " + std::to_string(x) + " exceeds 1");
    return std::asin(x);
}

} // namespace detail

/// Half-width (in energy) of the reflection-delay peak,
/// Delta E = (hbar / tau_c) asin(half_width_sine).
inline double resonance_half_width(const BarrierConfig& cfg, double E)
{
    const auto wn = wave_numbers(cfg, E);
    const double angle = detail::checked_half_width_angle(wn);
    const double tau_c = classical_time(cfg, wn).tau_c;
    if (!(tau_c > 0.0))
        throw UndefinedError("zero thickness: resonance half-width is unbounded");
    return cfg.hbar / tau_c * angle;
}

/// Energy half-width of a Gaussian packet of temporal spread w (delta E w = hbar / 2).
inline double packet_energy_width(double hbar, double w)
{
    if (!(w > 0.0))
        throw ConfigError("packet time spread w must be positive");
    return hbar / (2.0 * w);
}

/// Largest thickness for which a packet of spread w resolves the resonance:
/// a <= 2 v_c w asin(half_width_sine). Independent of cfg.a.
inline double packet_validity_bound(const BarrierConfig& cfg, double E, double w)
{
    if (!(w > 0.0))
        throw ConfigError("packet time spread w must be positive");
    const auto wn = wave_numbers(cfg, E);
    return 2.0 * classical_time(cfg, wn).v_c * w * detail::checked_half_width_angle(wn);
}

/// Smallest w for which cfg.a satisfies the restriction.
inline double minimum_packet_width(const BarrierConfig& cfg, double E)
{
    const auto wn = wave_numbers(cfg, E);
    return cfg.a / (2.0 * classical_time(cfg, wn).v_c * detail::checked_half_width_angle(wn));
}

// ---------------------------------------------------------------------------

struct ResonanceSummary
{
    int m = 0;
    double k0a_resonance = 0.0; ///< exactly m pi (transmission maximum)
    double k0a_at_peak = 0.0;   ///< refined extremum of tau_r at fixed E
    double a = 0.0;             ///< thickness at k0 a = m pi
    double tau_c = 0.0;
    double tau_t_max = 0.0;
    double tau_1_max = 0.0;
    double tau_r_at_resonance = 0.0;
    double tau_r_at_peak = 0.0;
    double T_max = 0.0;
    double half_width_E = 0.0;
};

/// Resonance m at fixed energy E: the thickness is set to m pi / k0 (cfg.a is
/// ignored). Peak values come from the closed forms at exactly k0 a = m pi;
/// the refined |tau_r| extremum is reported alongside, since the sin(2 k0 a)
/// term shifts it slightly off m pi.
inline ResonanceSummary resonance_summary(const BarrierConfig& cfg, double E, int m)
{
    if (m < 1)
        throw ConfigError("resonance index m must be >= 1");
    const auto wn = wave_numbers(cfg, E);
    const double angle = detail::checked_half_width_angle(wn);

    ResonanceSummary s;
    s.m = m;
    s.k0a_resonance = m * std::numbers::pi;
    s.a = s.k0a_resonance / wn.k0;
    const auto at = cfg.with_thickness(s.a);
    const auto ct = classical_time(at, wn);
    s.tau_c = ct.tau_c;
    s.tau_t_max = ct.tau_c * closed_form::tau_t_at_resonance(wn);
    s.tau_1_max = ct.tau_c * *closed_form::tau_1_at_resonance(wn);
    s.tau_r_at_resonance = s.tau_t_max + s.tau_1_max;
    s.T_max = transmission_probability_max(wn);
    s.half_width_E = cfg.hbar / ct.tau_c * angle;

    auto tau_r_at = [&](double theta) {
        const double a = theta / wn.k0;
        const double tc = classical_time(cfg.with_thickness(a), wn).tau_c;
        const auto t1 = tau_1_over_tau_c(wn, a);
        return tc * (tau_t_over_tau_c(wn, a) + t1.value_or(0.0));
    };
    auto abs_tau_r = [&](double theta) { return std::abs(tau_r_at(theta)); };
    // coarse bracket over half a period each side, then golden section
    const double lo = s.k0a_resonance - 0.5 * std::numbers::pi;
    const double hi = s.k0a_resonance + 0.5 * std::numbers::pi;
    constexpr std::size_t coarse = 2001;
    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t i = 0; i < coarse; ++i) {
        const double v = abs_tau_r(detail::linspace_at(lo, hi, coarse, i));
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double blo = detail::linspace_at(lo, hi, coarse, best == 0 ? 0 : best - 1);
    const double bhi = detail::linspace_at(lo, hi, coarse, std::min(coarse - 1, best + 1));
    s.k0a_at_peak = detail::golden_max(abs_tau_r, blo, bhi, 1e-10).first;
    s.tau_r_at_peak = tau_r_at(s.k0a_at_peak);
    return s;
}

} // namespace barrier_delay

#endif
