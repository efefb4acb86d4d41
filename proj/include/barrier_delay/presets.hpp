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

#ifndef BARRIER_DELAY_PRESETS_HPP
#define BARRIER_DELAY_PRESETS_HPP

#include <barrier_delay/barrier.hpp>
#include <barrier_delay/errors.hpp>
#include <barrier_delay/scan.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace barrier_delay
{

/// Parameter sets of the three reference figures, as scan requests.
struct FigurePreset
{
    int figure = 0;
    std::string name;   ///< "fig1", "fig2-solid", ...
    std::string label;  ///< plot title
    ScanRequest request;
    ScanOutput primary = ScanOutput::tau_t;
};

namespace presets
{

// Fig. 1 and the solid curve of Fig. 2: V0/E = 0.95, V1/E = 0, V2/E = 0.3.
inline constexpr double fig1_v0e = 0.95;
inline constexpr double fig1_v1e = 0.0;
inline constexpr double fig1_v2e = 0.3;

// Dashed curve of Fig. 2: V0/E = 0.95, V1/E = 0.3, V2/E = 0.
inline constexpr double fig2_dashed_v0e = 0.95;
inline constexpr double fig2_dashed_v1e = 0.3;
inline constexpr double fig2_dashed_v2e = 0.0;

// Fig. 3: V1 = 0, V2 = 0.3 V0, E in [V0, 1.15 V0], a = 10 / sqrt(0.3 mu V0).
inline constexpr double fig3_v1_over_v0 = 0.0;
inline constexpr double fig3_v2_over_v0 = 0.3;
inline constexpr double fig3_e_max_over_v0 = 1.15;
inline constexpr double fig3_thickness_numerator = 10.0;

inline constexpr std::size_t default_points = 2000;

inline ScanRequest thickness_request(double v0e, double v1e, double v2e, double k0a_min = 0.5,
                                     double k0a_max = 10.0, std::size_t points = default_points)
{
    ScanRequest req;
    req.mode = ScanMode::thickness;
    req.config = DimensionlessSetup::from_ratios(v0e, v1e, v2e, 0.0).config;
    req.energy = 1.0;
    req.k0a_min = k0a_min;
    req.k0a_max = k0a_max;
    req.n_points = points;
    return req;
}

/// Fig. 3 barrier in units V0 = mu = hbar = 1.
inline BarrierConfig fig3_config()
{
    BarrierConfig cfg;
    cfg.V0 = 1.0;
    cfg.V1 = fig3_v1_over_v0 * cfg.V0;
    cfg.V2 = fig3_v2_over_v0 * cfg.V0;
    cfg.mu = 1.0;
    cfg.hbar = 1.0;
    cfg.a = fig3_thickness_numerator / std::sqrt(0.3 * cfg.mu * cfg.V0);
    return cfg;
}

inline ScanRequest fig3_request(std::size_t points = default_points)
{
    ScanRequest req;
    req.mode = ScanMode::energy;
    req.config = fig3_config();
    // k0a at E = 1.15 V0
    const double k0_max = std::sqrt(2.0 * req.config.mu * (fig3_e_max_over_v0 - 1.0) * req.config.V0) /
                          req.config.hbar;
    req.k0a_min = 0.0;
    req.k0a_max = k0_max * req.config.a;
    req.n_points = points;
    return req;
}

} // namespace presets

/// Presets for one figure: one entry for Figs. 1 and 3, two (solid, dashed) for Fig. 2.
inline std::vector<FigurePreset> figure_presets(int figure)
{
    using namespace presets;
    switch (figure) {
    case 1:
        return {{1, "fig1", "tau_t vs k0a (V0/E=0.95, V1/E=0, V2/E=0.3)",
                 thickness_request(fig1_v0e, fig1_v1e, fig1_v2e), ScanOutput::tau_t}};
    case 2:
        return {{2, "fig2-solid", "tau_r vs k0a (V0/E=0.95, V1/E=0, V2/E=0.3)",
                 thickness_request(fig1_v0e, fig1_v1e, fig1_v2e), ScanOutput::tau_r},
                {2, "fig2-dashed", "tau_r vs k0a (V0/E=0.95, V1/E=0.3, V2/E=0)",
                 thickness_request(fig2_dashed_v0e, fig2_dashed_v1e, fig2_dashed_v2e),
                 ScanOutput::tau_r}};
    case 3:
        return {{3, "fig3", "tau_r vs k0a(E) (V1=0, V2=0.3 V0, a=10/sqrt(0.3 mu V0))", fig3_request(),
                 ScanOutput::tau_r}};
    default:
        throw ConfigError("unknown figure " + std::to_string(figure) + " (expected 1, 2 or 3)");
    }
}

} // namespace barrier_delay

#endif
