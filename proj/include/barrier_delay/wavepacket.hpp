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

#ifndef BARRIER_DELAY_WAVEPACKET_HPP
#define BARRIER_DELAY_WAVEPACKET_HPP

#include <barrier_delay/amplitudes.hpp>
#include <barrier_delay/barrier.hpp>
#include <barrier_delay/delays.hpp>
#include <barrier_delay/detail/parallel.hpp>
#include <barrier_delay/errors.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace barrier_delay
{

/// Gaussian spectral packet A(E) ~ exp(-(E - E0)^2 / (2 deltaE^2)) sampled at
/// n_energy midpoints of [E0 - span deltaE, E0 + span deltaE]. The temporal
/// spread is w = hbar / (2 deltaE).
struct PacketSpec
{
    double E0 = 1.0;
    double deltaE = 0.0;
    double w = 0.0;
    std::size_t n_energy = 1024;
    double energy_span = 5.0;
    double x_probe_left = 0.0;
    std::optional<double> x_probe_right; ///< defaults to the barrier edge a
    double t_min = 0.0;
    double t_max = 0.0;
    std::size_t n_time = 4096;

    void validate(const BarrierConfig& cfg) const
    {
        cfg.validate();
        if (!(deltaE > 0.0 && w > 0.0))
            throw ConstructionError("packet widths must be positive");
        if (std::abs(deltaE * w - 0.5 * cfg.hbar) > 1e-12 * cfg.hbar)
            throw ConstructionError("packet widths must satisfy deltaE * w = hbar / 2");
        if (n_energy < 64)
            throw ConstructionError("n_energy must be at least 64");
        if (n_time < 128)
            throw ConstructionError("n_time must be at least 128");
        if (!(energy_span > 0.0))
            throw ConstructionError("energy_span must be positive");
        if (!is_over_barrier(cfg, E0 - energy_span * deltaE))
            throw ConstructionError("packet spectrum reaches below the barrier top V0");
        if (!(t_min < t_max))
            throw ConstructionError("time window must satisfy t_min < t_max");
        if (x_probe_left > 0.0)
            throw ConstructionError("left probe must sit at x <= 0");
        if (x_probe_right && *x_probe_right < cfg.a)
            throw ConstructionError("right probe must sit at x >= a");
    }
};

/// Spec with a time window covering the incident, transmitted and reflected
/// peaks predicted by the closed forms, padded by pad_w * w on both sides.
inline PacketSpec make_packet_spec(const BarrierConfig& cfg, double E0, double w,
                                   std::size_t n_energy = 1024, std::size_t n_time = 4096,
                                   double energy_span = 5.0, double pad_w = 12.0)
{
    PacketSpec s;
    s.E0 = E0;
    s.w = w;
    s.deltaE = packet_energy_width(cfg.hbar, w);
    s.n_energy = n_energy;
    s.n_time = n_time;
    s.energy_span = energy_span;
    if (!is_over_barrier(cfg, E0 - energy_span * s.deltaE))
        throw ConstructionError("packet spectrum reaches below the barrier top V0");
    double lo = 0.0;
    double hi = 0.0;
    const double tt = tau_t_analytic(cfg, E0);
    lo = std::min(lo, tt);
    hi = std::max(hi, tt);
    if (const auto tr = tau_r(cfg, E0)) {
        lo = std::min(lo, *tr);
        hi = std::max(hi, *tr);
    }
    s.t_min = lo - pad_w * w;
    s.t_max = hi + pad_w * w;
    s.validate(cfg);
    return s;
}

/// |psi|^2 at the probes on the time grid.
struct PacketProfiles
{
    std::vector<double> t;
    std::vector<double> incident;
    std::vector<double> reflected;
    std::vector<double> transmitted;
};

struct PacketMeasurement
{
    double t_peak_incident = 0.0;
    double t_peak_transmitted = 0.0;
    double t_peak_reflected = 0.0;
    double tau_t_measured = 0.0;
    double tau_r_measured = 0.0;
    double distortion_transmitted = 0.0;
    double distortion_reflected = 0.0;
    double dt_grid = 0.0;
    /// centroid-based delays, secondary diagnostic
    double tau_t_centroid = 0.0;
    double tau_r_centroid = 0.0;
    /// a within the thickness restriction for this w; empty when undefined
    std::optional<bool> restriction_satisfied;
    bool reliable = false;
};

inline constexpr double default_distortion_threshold = 0.05;

/// 1 - max normalised cross-correlation of two intensity profiles sampled on
/// grids of equal spacing. 0 for a pure translation; in [0, 1] for
/// non-negative profiles. The lag maximum is refined by a parabola.
inline double distortion_metric(std::span<const double> reference, std::span<const double> measured)
{
    if (reference.empty() || measured.empty())
        throw std::invalid_argument("distortion_metric: empty profile");
    const double rmax = *std::max_element(reference.begin(), reference.end());
    const double mmax = *std::max_element(measured.begin(), measured.end());
    if (!(rmax > 0.0) || !(mmax > 0.0))
        throw std::invalid_argument("distortion_metric: profile has no positive peak");

    double rr = 0.0;
    double mm = 0.0;
    for (double v : reference)
        rr += (v / rmax) * (v / rmax);
    for (double v : measured)
        mm += (v / mmax) * (v / mmax);
    const double norm = std::sqrt(rr * mm);

    const auto nr = static_cast<std::ptrdiff_t>(reference.size());
    const auto nm = static_cast<std::ptrdiff_t>(measured.size());
    // corr[lag + nr - 1] = sum_i ref[i] * meas[i + lag]
    std::vector<double> corr(static_cast<std::size_t>(nr + nm - 1), 0.0);
    for (std::ptrdiff_t lag = -(nr - 1); lag < nm; ++lag) {
        const std::ptrdiff_t i0 = std::max<std::ptrdiff_t>(0, -lag);
        const std::ptrdiff_t i1 = std::min(nr, nm - lag);
        double acc = 0.0;
        for (std::ptrdiff_t i = i0; i < i1; ++i)
            acc += reference[static_cast<std::size_t>(i)] * measured[static_cast<std::size_t>(i + lag)];
        corr[static_cast<std::size_t>(lag + nr - 1)] = acc / (rmax * mmax * norm);
    }
    const auto best_it = std::max_element(corr.begin(), corr.end());
    double best = *best_it;
    const auto k = static_cast<std::size_t>(best_it - corr.begin());
    if (k > 0 && k + 1 < corr.size()) {
        const double y0 = corr[k - 1];
        const double y2 = corr[k + 1];
        const double den = y0 - 2.0 * best + y2;
        if (den < 0.0) {
            const double d = 0.5 * (y0 - y2) / den;
            best = best - 0.25 * (y0 - y2) * d;
        }
    }
    best = std::clamp(best, 0.0, 1.0);
    return std::clamp(1.0 - best, 0.0, 2.0);
}

namespace detail
{

// Grid maximum refined by a 3-point parabola.
inline double peak_time(std::span<const double> t, std::span<const double> p, const char* which)
{
    const auto it = std::max_element(p.begin(), p.end());
    const auto i = static_cast<std::size_t>(it - p.begin());
    if (i == 0 || i + 1 == p.size())
        throw NoPeakError(std::string("no interior maximum of the ") + which +
                          " profile on the time window");
    const double y0 = p[i - 1];
    const double y1 = p[i];
    const double y2 = p[i + 1];
    const double den = y0 - 2.0 * y1 + y2;
    const double shift = den < 0.0 ? 0.5 * (y0 - y2) / den : 0.0;
    return t[i] + shift * (t[i + 1] - t[i]);
}

inline double centroid(std::span<const double> t, std::span<const double> p)
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        num += t[i] * p[i];
        den += p[i];
    }
    return num / den;
}

} // namespace detail

/// Time profiles of the free incident packet and of the reflected and
/// transmitted packets, each synthesised from the same spectral sum
/// psi(t) = sum_j A(E_j) S(E_j) exp(i (k x - E_j t / hbar)) dE with
/// S = 1 (incident, +k1 x), r (reflected, -k1 x) or t (transmitted, k2 (x - a)).
/// Incident and reflected are taken at x_probe_left, transmitted at
/// x_probe_right. Interference between incident and reflected waves is not
/// included.
inline PacketProfiles synthesize_profiles(const BarrierConfig& cfg, const PacketSpec& spec)
{
    spec.validate(cfg);
    const std::size_t ne = spec.n_energy;
    const double e_lo = spec.E0 - spec.energy_span * spec.deltaE;
    const double dE = 2.0 * spec.energy_span * spec.deltaE / static_cast<double>(ne);
    const double x_left = spec.x_probe_left;
    const double x_right = spec.x_probe_right.value_or(cfg.a);

    std::vector<double> offsets(ne);
    std::vector<complex> c_inc(ne), c_ref(ne), c_tr(ne);
    for (std::size_t j = 0; j < ne; ++j) {
        const double E = e_lo + (static_cast<double>(j) + 0.5) * dE;
        const auto wn = wave_numbers(cfg, E);
        const auto amp = amplitudes(wn, cfg.a);
        const double u = (E - spec.E0) / spec.deltaE;
        const double A = std::exp(-0.5 * u * u) * dE;
        offsets[j] = E - spec.E0;
        c_inc[j] = A * std::polar(1.0, wn.k1 * x_left);
        c_ref[j] = A * amp.r * std::polar(1.0, -wn.k1 * x_left);
        c_tr[j] = A * amp.t * std::polar(1.0, wn.k2 * (x_right - cfg.a));
    }

    PacketProfiles out;
    const std::size_t nt = spec.n_time;
    out.t.resize(nt);
    out.incident.resize(nt);
    out.reflected.resize(nt);
    out.transmitted.resize(nt);
    // the carrier exp(-i E0 t / hbar) drops out of |psi|^2
    detail::parallel_for(nt, [&](std::size_t i) {
        const double t = detail::linspace_at(spec.t_min, spec.t_max, nt, i);
        complex si{}, sr{}, st{};
        for (std::size_t j = 0; j < ne; ++j) {
            const complex ph = std::polar(1.0, -offsets[j] * t / cfg.hbar);
            si += c_inc[j] * ph;
            sr += c_ref[j] * ph;
            st += c_tr[j] * ph;
        }
        out.t[i] = t;
        out.incident[i] = std::norm(si);
        out.reflected[i] = std::norm(sr);
        out.transmitted[i] = std::norm(st);
    });
    return out;
}

/// Peak-arrival delays and distortion from synthesised profiles. Nonzero probe
/// offsets are removed with the carrier group velocities hbar k / mu.
inline PacketMeasurement measure_profiles(const BarrierConfig& cfg, const PacketSpec& spec,
                                          const PacketProfiles& prof,
                                          double distortion_threshold = default_distortion_threshold)
{
    const auto wn = wave_numbers(cfg, spec.E0);
    const double v1 = cfg.hbar * wn.k1 / cfg.mu;
    const double v2 = cfg.hbar * wn.k2 / cfg.mu;
    const double x_left = spec.x_probe_left;
    const double x_right = spec.x_probe_right.value_or(cfg.a);

    PacketMeasurement m;
    m.dt_grid = (spec.t_max - spec.t_min) / static_cast<double>(spec.n_time - 1);
    m.t_peak_incident = detail::peak_time(prof.t, prof.incident, "incident");
    m.t_peak_transmitted = detail::peak_time(prof.t, prof.transmitted, "transmitted");
    m.t_peak_reflected = detail::peak_time(prof.t, prof.reflected, "reflected");

    // the incident peak reaches x = 0 at t_inc - x_left / v1
    const double t_at_origin = m.t_peak_incident - x_left / v1;
    m.tau_t_measured = m.t_peak_transmitted - (x_right - cfg.a) / v2 - t_at_origin;
    m.tau_r_measured = m.t_peak_reflected + x_left / v1 - t_at_origin;

    const double c_inc = detail::centroid(prof.t, prof.incident) - x_left / v1;
    m.tau_t_centroid = detail::centroid(prof.t, prof.transmitted) - (x_right - cfg.a) / v2 - c_inc;
    m.tau_r_centroid = detail::centroid(prof.t, prof.reflected) + x_left / v1 - c_inc;

    m.distortion_transmitted = distortion_metric(prof.incident, prof.transmitted);
    m.distortion_reflected = distortion_metric(prof.incident, prof.reflected);

    try {
        m.restriction_satisfied = cfg.a <= packet_validity_bound(cfg, spec.E0, spec.w);
    } catch (const UndefinedError&) {
        m.restriction_satisfied.reset();
    }
    m.reliable = m.restriction_satisfied.value_or(false) &&
                 m.distortion_reflected <= distortion_threshold &&
                 m.distortion_transmitted <= distortion_threshold;
    return m;
}

inline PacketMeasurement synthesize(const BarrierConfig& cfg, const PacketSpec& spec)
{
    return measure_profiles(cfg, spec, synthesize_profiles(cfg, spec));
}

} // namespace barrier_delay

#endif
