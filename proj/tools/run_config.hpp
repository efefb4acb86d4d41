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

// Run configuration shared by the command-line front end: JSON config files
// and flag overrides resolve to one RunConfig.
//
// JSON schema (all keys optional except one of "ratios" / "units"):
//
//   {
//     "ratios": {"v0e": 0.95, "v1e": 0.0, "v2e": 0.3},
//     "units":  {"V0": 1, "V1": 0, "V2": 0.3, "a": 18.26, "mu": 1, "hbar": 1, "E": 1.02},
//     "scan":   {"mode": "thickness", "k0a_min": 0.5, "k0a_max": 10, "points": 2000,
//                "outputs": ["tau_t", "tau_r"]},
//     "resonances": {"max_m": 3},
//     "packet": {"k0a": 3.14159, "margin": 2, "w": 675.7, "n_energy": 1024,
//                "n_time": 4096, "energy_span": 5, "t_min": -9000, "t_max": 8200},
//     "outdir": "out",
//     "format": "csv"
//   }
//
// "ratios" fixes E = 1 with mu = hbar = 1. "units" takes raw values; "E" is
// the incident energy for thickness scans, resonances and packets, and "a" is
// the thickness for energy scans and packets.

#ifndef BARRIER_DELAY_TOOLS_RUN_CONFIG_HPP
#define BARRIER_DELAY_TOOLS_RUN_CONFIG_HPP

#include <barrier_delay.hpp>

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace barrier_delay::cli
{

struct Ratios
{
    double v0e = 0.0;
    double v1e = 0.0;
    double v2e = 0.0;
};

struct RawUnits
{
    BarrierConfig config;
    std::optional<double> E;
};

struct PacketOptions
{
    std::optional<double> k0a;
    double margin = 2.0;
    std::optional<double> w;
    std::size_t n_energy = 1024;
    std::size_t n_time = 4096;
    double energy_span = 5.0;
    std::optional<double> t_min;
    std::optional<double> t_max;
};

struct RunConfig
{
    std::optional<int> figure;
    std::optional<Ratios> ratios;
    std::optional<RawUnits> units;

    ScanMode mode = ScanMode::thickness;
    std::optional<double> k0a_min;
    std::optional<double> k0a_max;
    std::optional<std::size_t> points;
    std::vector<ScanOutput> outputs;

    int max_m = 3;
    PacketOptions packet;

    std::filesystem::path outdir = ".";
    std::string format = "csv";

    bool want_csv() const { return format == "csv" || format == "both"; }
    bool want_svg() const { return format == "svg" || format == "both"; }

    /// Throws ConfigError unless exactly one barrier source is given.
    void validate() const
    {
        const int sources = (figure ? 1 : 0) + (ratios ? 1 : 0) + (units ? 1 : 0);
        if (sources == 0)
            throw ConfigError("no barrier given: use --figure, --v0e/--v1e/--v2e, or a config file");
        if (sources > 1)
            throw ConfigError("give exactly one of a figure preset, ratios, or raw units");
        if (format != "csv" && format != "svg" && format != "both")
            throw ConfigError("format must be csv, svg or both");
        if (max_m < 1)
            throw ConfigError("max_m must be >= 1");
        if (!(packet.margin > 0.0))
            throw ConfigError("packet margin must be positive");
    }

    /// Barrier and incident energy. For figure presets and ratios, E = 1.
    std::pair<BarrierConfig, double> barrier(double k0a_default = 0.0) const
    {
        if (units) {
            if (!units->E)
                throw ConfigError("raw units need an incident energy E");
            return {units->config, *units->E};
        }
        Ratios r;
        if (ratios) {
            r = *ratios;
        } else {
            const auto p = figure_presets(*figure).front();
            if (p.request.mode == ScanMode::energy)
                throw ConfigError("figure 3 has no single incident energy; use ratios or raw units");
            r = {p.request.config.V0, p.request.config.V1, p.request.config.V2};
        }
        auto s = DimensionlessSetup::from_ratios(r.v0e, r.v1e, r.v2e, k0a_default);
        return {s.config, s.E};
    }
};

namespace detail
{

template <typename T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

} // namespace detail

inline RunConfig run_config_from_json(const nlohmann::json& j)
{
    using detail::get_opt;
    RunConfig rc;
    if (!j.is_object())
        throw ConfigError("config file must hold a JSON object");
    if (auto f = get_opt<int>(j, "figure"))
        rc.figure = *f;
    if (j.contains("ratios")) {
        const auto& r = j.at("ratios");
        rc.ratios = Ratios{r.at("v0e").get<double>(), r.at("v1e").get<double>(), r.at("v2e").get<double>()};
    }
    if (j.contains("units")) {
        const auto& u = j.at("units");
        RawUnits raw;
        raw.config.V0 = u.at("V0").get<double>();
        raw.config.V1 = u.at("V1").get<double>();
        raw.config.V2 = u.at("V2").get<double>();
        raw.config.a = u.value("a", 0.0);
        raw.config.mu = u.value("mu", 1.0);
        raw.config.hbar = u.value("hbar", 1.0);
        raw.E = get_opt<double>(u, "E");
        rc.units = raw;
    }
    if (j.contains("scan")) {
        const auto& s = j.at("scan");
        const auto mode = s.value("mode", std::string("thickness"));
        if (mode == "thickness")
            rc.mode = ScanMode::thickness;
        else if (mode == "energy")
            rc.mode = ScanMode::energy;
        else
            throw ConfigError("scan.mode must be \"thickness\" or \"energy\"");
        rc.k0a_min = get_opt<double>(s, "k0a_min");
        rc.k0a_max = get_opt<double>(s, "k0a_max");
        rc.points = get_opt<std::size_t>(s, "points");
        if (s.contains("outputs")) {
            for (const auto& o : s.at("outputs")) {
                const auto name = o.get<std::string>();
                const auto parsed = parse_scan_output(name);
                if (!parsed)
                    throw ConfigError("unknown scan output \"" + name + "\"");
                rc.outputs.push_back(*parsed);
            }
        }
    }
    if (j.contains("resonances"))
        rc.max_m = j.at("resonances").value("max_m", rc.max_m);
    if (j.contains("packet")) {
        const auto& p = j.at("packet");
        rc.packet.k0a = get_opt<double>(p, "k0a");
        rc.packet.margin = p.value("margin", rc.packet.margin);
        rc.packet.w = get_opt<double>(p, "w");
        rc.packet.n_energy = p.value("n_energy", rc.packet.n_energy);
        rc.packet.n_time = p.value("n_time", rc.packet.n_time);
        rc.packet.energy_span = p.value("energy_span", rc.packet.energy_span);
        rc.packet.t_min = get_opt<double>(p, "t_min");
        rc.packet.t_max = get_opt<double>(p, "t_max");
    }
    if (auto o = get_opt<std::string>(j, "outdir"))
        rc.outdir = *o;
    if (auto f = get_opt<std::string>(j, "format"))
        rc.format = *f;
    return rc;
}

/// Scan requests for a run: the figure presets (with overrides applied), or a
/// single request built from ratios or raw units.
inline std::vector<FigurePreset> scan_plan(const RunConfig& rc)
{
    std::vector<FigurePreset> plan;
    if (rc.figure) {
        plan = figure_presets(*rc.figure);
    } else if (rc.ratios) {
        FigurePreset p;
        p.name = "custom";
        p.label = "V0/E=" + format_number(rc.ratios->v0e) + ", V1/E=" + format_number(rc.ratios->v1e) +
                  ", V2/E=" + format_number(rc.ratios->v2e);
        if (rc.mode == ScanMode::energy)
            throw ConfigError("ratio configs describe a fixed energy; energy scans need raw units");
        p.request = presets::thickness_request(rc.ratios->v0e, rc.ratios->v1e, rc.ratios->v2e);
        plan.push_back(p);
    } else {
        FigurePreset p;
        p.name = "custom";
        p.label = "raw units";
        p.request.mode = rc.mode;
        p.request.config = rc.units->config;
        if (rc.mode == ScanMode::thickness) {
            if (!rc.units->E)
                throw ConfigError("thickness scans need the incident energy E");
            p.request.energy = *rc.units->E;
        }
        plan.push_back(p);
    }
    for (auto& p : plan) {
        if (rc.k0a_min)
            p.request.k0a_min = *rc.k0a_min;
        if (rc.k0a_max)
            p.request.k0a_max = *rc.k0a_max;
        if (rc.points)
            p.request.n_points = *rc.points;
        if (!rc.outputs.empty()) {
            p.primary = rc.outputs.front();
            p.request.outputs = rc.outputs;
        } else {
            p.request.outputs = {p.primary};
        }
    }
    return plan;
}

} // namespace barrier_delay::cli

#endif
