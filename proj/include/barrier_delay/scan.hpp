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

#ifndef BARRIER_DELAY_SCAN_HPP
#define BARRIER_DELAY_SCAN_HPP

#include <barrier_delay/amplitudes.hpp>
#include <barrier_delay/barrier.hpp>
#include <barrier_delay/delays.hpp>
#include <barrier_delay/detail/numerics.hpp>
#include <barrier_delay/detail/parallel.hpp>
#include <barrier_delay/errors.hpp>
#include <barrier_delay/phase.hpp>

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace barrier_delay
{

enum class ScanMode
{
    thickness, ///< fixed E, a = k0a / k0 per row
    energy     ///< fixed a, E = V0 + (hbar k0a / a)^2 / (2 mu) per row
};

enum class ScanOutput
{
    tau_t,
    tau_r,
    tau_1,
    T,
    Tc,
    phases
};

inline std::string_view to_string(ScanOutput o) noexcept
{
    switch (o) {
    case ScanOutput::tau_t:
        return "tau_t";
    case ScanOutput::tau_r:
        return "tau_r";
    case ScanOutput::tau_1:
        return "tau_1";
    case ScanOutput::T:
        return "T";
    case ScanOutput::Tc:
        return "Tc";
    case ScanOutput::phases:
        return "phases";
    }
    return "?";
}

inline std::optional<ScanOutput> parse_scan_output(std::string_view s) noexcept
{
    for (auto o : {ScanOutput::tau_t, ScanOutput::tau_r, ScanOutput::tau_1, ScanOutput::T,
                   ScanOutput::Tc, ScanOutput::phases})
        if (to_string(o) == s)
            return o;
    return std::nullopt;
}

struct ScanRequest
{
    ScanMode mode = ScanMode::thickness;
    BarrierConfig config;       ///< config.a is used in energy mode only
    double energy = 1.0;        ///< used in thickness mode only
    double k0a_min = 0.5;
    double k0a_max = 10.0;
    std::size_t n_points = 2000;
    std::vector<ScanOutput> outputs{ScanOutput::tau_t, ScanOutput::tau_r, ScanOutput::tau_1,
                                    ScanOutput::T,     ScanOutput::Tc,    ScanOutput::phases};

    void validate() const
    {
        config.validate();
        if (!(k0a_min < k0a_max))
            throw ConfigError("scan range must satisfy k0a_min < k0a_max");
        if (!(k0a_min >= 0.0))
            throw ConfigError("scan range must be non-negative in k0a");
        if (n_points < 2)
            throw ConfigError("scan needs at least 2 points");
        if (mode == ScanMode::energy && !(config.a > 0.0))
            throw ConfigError("energy scan needs a positive thickness");
        if (mode == ScanMode::thickness && !is_over_barrier(config, energy))
            throw DomainError("thickness scan energy must be above the barrier");
    }
};

/// Per-row reason codes; several may be set at once.
enum RowFlag : unsigned
{
    flag_none = 0,
    flag_domain = 1u << 0,         ///< energy not over the barrier, row not computed
    flag_tau1_undefined = 1u << 1, ///< g1 = 0: tau_1, tau_r, phi1 undefined
    flag_phase_wrap = 1u << 2      ///< ~pi jump before this row, branch arbitrary
};

inline std::string flag_codes(unsigned flags)
{
    std::string out;
    auto add = [&](unsigned bit, const char* code) {
        if (flags & bit) {
            if (!out.empty())
                out += '|';
            out += code;
        }
    };
    add(flag_domain, "domain");
    add(flag_tau1_undefined, "tau1_undefined");
    add(flag_phase_wrap, "phase_wrap");
    return out;
}

/// One grid point. Delays are in units of the row's tau_c.
struct ScanRow
{
    double k0a = 0.0;
    double E = 0.0;
    double a = 0.0;
    std::optional<double> tau_t_rel;
    std::optional<double> tau_1_rel;
    std::optional<double> tau_r_rel;
    std::optional<double> T;
    std::optional<double> Tc;
    std::optional<double> phi1_unwrapped;
    std::optional<double> phi2_unwrapped;
    unsigned flags = flag_none;
};

struct ScanResult
{
    ScanRequest request;
    std::vector<ScanRow> rows;

    std::size_t count_flagged(unsigned mask) const noexcept
    {
        std::size_t n = 0;
        for (const auto& r : rows)
            n += (r.flags & mask) != 0;
        return n;
    }
};

inline std::optional<double> row_value(const ScanRow& row, ScanOutput which) noexcept
{
    switch (which) {
    case ScanOutput::tau_t:
        return row.tau_t_rel;
    case ScanOutput::tau_r:
        return row.tau_r_rel;
    case ScanOutput::tau_1:
        return row.tau_1_rel;
    case ScanOutput::T:
        return row.T;
    case ScanOutput::Tc:
        return row.Tc;
    case ScanOutput::phases:
        return row.phi2_unwrapped;
    }
    return std::nullopt;
}

/// Closed-form values at one k0a. Phases are left as principal values; the
/// scans unwrap them afterwards. Never throws for domain problems: those end
/// up in flags.
inline ScanRow evaluate_row(const ScanRequest& req, double k0a)
{
    ScanRow row;
    row.k0a = k0a;
    const auto& cfg = req.config;
    if (req.mode == ScanMode::thickness) {
        row.E = req.energy;
    } else {
        row.a = cfg.a;
        row.E = energy_for_k0(cfg, k0a / cfg.a);
    }
    if (!is_over_barrier(cfg, row.E)) {
        row.flags |= flag_domain;
        return row;
    }
    const auto wn = wave_numbers(cfg, row.E);
    if (req.mode == ScanMode::thickness)
        row.a = k0a / wn.k0;

    const auto amp = amplitudes(wn, row.a);
    row.T = amp.T;
    row.Tc = amp.Tc;
    row.phi2_unwrapped = amp.phi2;
    row.phi1_unwrapped = amp.phi1;
    row.tau_t_rel = tau_t_over_tau_c(wn, row.a);
    row.tau_1_rel = tau_1_over_tau_c(wn, row.a);
    if (row.tau_1_rel)
        row.tau_r_rel = *row.tau_t_rel + *row.tau_1_rel;
    else
        row.flags |= flag_tau1_undefined;
    return row;
}

namespace detail
{

// Replace principal phases by their nearest-branch continuation, skipping
// rows where the phase is undefined.
inline void unwrap_column(std::vector<ScanRow>& rows, std::optional<double> ScanRow::*column)
{
    std::vector<std::size_t> idx;
    std::vector<double> principal;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (const auto& v = rows[i].*column) {
            idx.push_back(i);
            principal.push_back(*v);
        }
    }
    auto res = unwrap_phase_flagged(principal);
    for (std::size_t j = 0; j < idx.size(); ++j)
        rows[idx[j]].*column = res.phases[j];
    for (auto j : res.ambiguous)
        rows[idx[j]].flags |= flag_phase_wrap;
}

inline ScanResult run_scan(const ScanRequest& req)
{
    req.validate();
    ScanResult result;
    result.request = req;
    result.rows.resize(req.n_points);
    parallel_for(req.n_points, [&](std::size_t i) {
        result.rows[i] = evaluate_row(req, linspace_at(req.k0a_min, req.k0a_max, req.n_points, i));
    });
    unwrap_column(result.rows, &ScanRow::phi1_unwrapped);
    unwrap_column(result.rows, &ScanRow::phi2_unwrapped);
    return result;
}

} // namespace detail

/// Thickness sweep at fixed energy over k0a in [k0a_min, k0a_max].
inline ScanResult scan_thickness(const ScanRequest& req)
{
    if (req.mode != ScanMode::thickness)
        throw ConfigError("scan_thickness needs a thickness-mode request");
    return detail::run_scan(req);
}

/// Energy sweep at fixed thickness, indexed by k0a(E). Rows at or below the
/// barrier top are flagged rather than computed.
inline ScanResult scan_energy(const ScanRequest& req)
{
    if (req.mode != ScanMode::energy)
        throw ConfigError("scan_energy needs an energy-mode request");
    return detail::run_scan(req);
}

inline ScanResult run_scan(const ScanRequest& req)
{
    return req.mode == ScanMode::thickness ? scan_thickness(req) : scan_energy(req);
}

/// Grid indices of strict interior local maxima (or minima) of one output.
inline std::vector<std::size_t> local_extrema(const ScanResult& res, ScanOutput which, bool maxima)
{
    std::vector<std::size_t> out;
    const auto& rows = res.rows;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        const auto l = row_value(rows[i - 1], which);
        const auto c = row_value(rows[i], which);
        const auto r = row_value(rows[i + 1], which);
        if (!l || !c || !r)
            continue;
        const double s = maxima ? 1.0 : -1.0;
        if (s * *c > s * *l && s * *c >= s * *r)
            out.push_back(i);
    }
    return out;
}

/// Golden-section refinement of an extremum of one output between two k0a
/// values, evaluated pointwise in closed form. Returns (k0a, value).
inline std::pair<double, double> refine_extremum(const ScanRequest& req, ScanOutput which, double lo,
                                                 double hi, bool maximize, double tol = 1e-10)
{
    auto f = [&](double k0a) {
        const auto v = row_value(evaluate_row(req, k0a), which);
        if (!v)
            throw UndefinedError("quantity undefined inside the refinement bracket");
        return maximize ? *v : -*v;
    };
    auto [x, v] = detail::golden_max(f, lo, hi, tol);
    return {x, maximize ? v : -v};
}

} // namespace barrier_delay

#endif
