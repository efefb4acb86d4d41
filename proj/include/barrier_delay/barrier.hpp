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

#ifndef BARRIER_DELAY_BARRIER_HPP
#define BARRIER_DELAY_BARRIER_HPP

#include <barrier_delay/errors.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

namespace barrier_delay
{

/// Rectangular barrier of height V0 on [0, a], flanked by the constant
/// potentials V1 (x < 0) and V2 (x > a).
///
/// Units are whatever the caller uses consistently; the defaults (mu = hbar = 1)
/// are the natural units in which all figure presets are expressed.
struct BarrierConfig
{
    double V0 = 1.0;
    double V1 = 0.0;
    double V2 = 0.0;
    double a = 0.0;
    double mu = 1.0;
    double hbar = 1.0;

    /// Throws ConfigError unless V0 > V1, V0 > V2, a >= 0, mu > 0, hbar > 0.
    void validate() const
    {
        auto fail = [](const std::string& msg) { throw ConfigError("BarrierConfig: " + msg); };
        if (!(std::isfinite(V0) && std::isfinite(V1) && std::isfinite(V2) && std::isfinite(a) &&
              std::isfinite(mu) && std::isfinite(hbar)))
            fail("non-finite field");
        if (!(V0 > V1))
            fail("barrier height V0 must exceed V1");
        if (!(V0 > V2))
            fail("barrier height V0 must exceed V2");
        if (!(a >= 0.0))
            fail("thickness a must be non-negative");
        if (!(mu > 0.0))
            fail("mass mu must be positive");
        if (!(hbar > 0.0))
            fail("hbar must be positive");
    }

    /// The same barrier seen by a particle incident from the right.
    BarrierConfig mirrored() const
    {
        BarrierConfig c = *this;
        std::swap(c.V1, c.V2);
        return c;
    }

    /// Copy with a different thickness.
    BarrierConfig with_thickness(double thickness) const
    {
        BarrierConfig c = *this;
        c.a = thickness;
        return c;
    }

    friend bool operator==(const BarrierConfig&, const BarrierConfig&) = default;
};

/// Wave numbers at one energy. All three are strictly positive in the
/// over-barrier regime, with k1 > k0 and k2 > k0.
struct WaveNumbers
{
    double k0 = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    double E = 0.0;
};

/// Relative guard below which E - V0 is treated as degenerate.
inline constexpr double energy_guard = 1e-12;

/// True when E is strictly inside the over-barrier domain of cfg.
inline bool is_over_barrier(const BarrierConfig& cfg, double E) noexcept
{
    return std::isfinite(E) && (E - cfg.V0) > energy_guard * std::abs(cfg.V0) && E > cfg.V0 &&
           E > cfg.V1 && E > cfg.V2;
}

inline WaveNumbers wave_numbers(const BarrierConfig& cfg, double E)
{
    cfg.validate();
    if (!is_over_barrier(cfg, E)) {
        std::ostringstream os;
        os.precision(17);
        os << "energy E=" << E << " is not above the barrier height V0=" << cfg.V0
           << " (over-barrier regime required)";
        throw DomainError(os.str());
    }
    const double scale = 2.0 * cfg.mu;
    WaveNumbers wn;
    wn.E = E;
    wn.k0 = std::sqrt(scale * (E - cfg.V0)) / cfg.hbar;
    wn.k1 = std::sqrt(scale * (E - cfg.V1)) / cfg.hbar;
    wn.k2 = std::sqrt(scale * (E - cfg.V2)) / cfg.hbar;
    return wn;
}

/// Energy at which the barrier wave number equals k0.
inline double energy_for_k0(const BarrierConfig& cfg, double k0)
{
    return cfg.V0 + (cfg.hbar * k0) * (cfg.hbar * k0) / (2.0 * cfg.mu);
}

/// A configuration built from dimensionless quantities: potentials as
/// fractions of E, and the barrier phase thickness k0*a.
/// The incident energy is fixed to E = 1 with hbar = mu = 1.
struct DimensionlessSetup
{
    BarrierConfig config;
    double E = 1.0;

    static DimensionlessSetup from_ratios(double v0_over_e, double v1_over_e, double v2_over_e,
                                          double k0a)
    {
        DimensionlessSetup s;
        s.config.V0 = v0_over_e;
        s.config.V1 = v1_over_e;
        s.config.V2 = v2_over_e;
        s.config.mu = 1.0;
        s.config.hbar = 1.0;
        if (!(v0_over_e < 1.0))
            throw DomainError("V0/E must be below 1 for over-barrier scattering");
        if (!(k0a >= 0.0))
            throw ConfigError("k0*a must be non-negative");
        s.config.a = 0.0;
        s.config.validate();
        const double k0 = wave_numbers(s.config, s.E).k0;
        s.config.a = k0a / k0;
        return s;
    }
};

} // namespace barrier_delay

#endif
