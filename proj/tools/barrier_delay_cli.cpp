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

#include "run_config.hpp"

#include <barrier_delay.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace barrier_delay;
using barrier_delay::cli::RunConfig;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_domain = 2;

struct Flags
{
    std::string config_file;
    std::optional<int> figure;
    std::optional<double> v0e, v1e, v2e;
    std::optional<double> k0a_min, k0a_max;
    std::optional<std::size_t> points;
    std::vector<std::string> outputs;
    std::optional<std::string> outdir;
    std::optional<std::string> format;
    std::optional<std::string> mode;

    std::optional<int> max_m;

    std::optional<double> packet_k0a;
    std::optional<double> margin;
    std::optional<double> w;
    std::optional<std::size_t> n_energy, n_time;
    std::optional<double> span;
    std::optional<double> t_min, t_max;
    bool check_bound = false;
};

void add_barrier_flags(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--config", f.config_file, "JSON run configuration")->check(CLI::ExistingFile);
    cmd->add_option("--figure", f.figure, "figure preset")->check(CLI::IsMember({1, 2, 3}));
    cmd->add_option("--v0e", f.v0e, "barrier height V0/E");
    cmd->add_option("--v1e", f.v1e, "left potential V1/E");
    cmd->add_option("--v2e", f.v2e, "right potential V2/E");
    cmd->add_option("--outdir", f.outdir, "output directory");
    cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "svg", "both"}));
}

RunConfig resolve(const Flags& f)
{
    RunConfig rc;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in)
            throw ConfigError("cannot open config file " + f.config_file);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("malformed config file: ") + e.what());
        }
        try {
            rc = cli::run_config_from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("invalid config file: ") + e.what());
        }
    }
    if (f.figure) {
        rc.figure = f.figure;
        rc.ratios.reset();
        rc.units.reset();
    }
    if (f.v0e || f.v1e || f.v2e) {
        if (!(f.v0e && f.v1e && f.v2e))
            throw ConfigError("--v0e, --v1e and --v2e must be given together");
        if (f.figure)
            throw ConfigError("give either --figure or ratios, not both");
        rc.ratios = cli::Ratios{*f.v0e, *f.v1e, *f.v2e};
        rc.figure.reset();
        rc.units.reset();
    }
    if (f.mode)
        rc.mode = *f.mode == "energy" ? ScanMode::energy : ScanMode::thickness;
    if (f.k0a_min)
        rc.k0a_min = f.k0a_min;
    if (f.k0a_max)
        rc.k0a_max = f.k0a_max;
    if (f.points)
        rc.points = f.points;
    if (!f.outputs.empty()) {
        rc.outputs.clear();
        for (const auto& name : f.outputs) {
            const auto o = parse_scan_output(name);
            if (!o)
                throw ConfigError("unknown output \"" + name + "\"");
            rc.outputs.push_back(*o);
        }
    }
    if (f.outdir)
        rc.outdir = *f.outdir;
    if (f.format)
        rc.format = *f.format;
    if (f.max_m)
        rc.max_m = *f.max_m;
    if (f.packet_k0a)
        rc.packet.k0a = f.packet_k0a;
    if (f.margin)
        rc.packet.margin = *f.margin;
    if (f.w)
        rc.packet.w = f.w;
    if (f.n_energy)
        rc.packet.n_energy = *f.n_energy;
    if (f.n_time)
        rc.packet.n_time = *f.n_time;
    if (f.span)
        rc.packet.energy_span = *f.span;
    if (f.t_min)
        rc.packet.t_min = f.t_min;
    if (f.t_max)
        rc.packet.t_max = f.t_max;
    rc.validate();
    return rc;
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void ensure_outdir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw ConfigError("output directory " + dir.string() + " is not writable");
}

int cmd_scan(const RunConfig& rc)
{
    ensure_outdir(rc.outdir);
    const auto plan = cli::scan_plan(rc);
    bool all_failed = true;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const auto& p = plan[i];
        const std::string suffix = i == 0 ? "" : "_" + p.name.substr(p.name.find('-') + 1);
        const auto res = run_scan(p.request);
        const auto domain_rows = res.count_flagged(flag_domain);
        if (domain_rows < res.rows.size())
            all_failed = false;
        if (rc.want_csv()) {
            std::ostringstream os;
            write_scan_csv(os, res);
            write_file(rc.outdir / ("scan" + suffix + ".csv"), os.str());
        }
        if (rc.want_svg()) {
            for (std::size_t k = 0; k < p.request.outputs.size(); ++k) {
                const auto which = p.request.outputs[k];
                std::ostringstream os;
                write_scan_svg(os, res, which, p.label);
                const std::string name =
                    k == 0 ? "scan" + suffix : "scan" + suffix + "_" + std::string(to_string(which));
                write_file(rc.outdir / (name + ".svg"), os.str());
            }
        }
        std::cout << p.name << ": " << res.rows.size() << " rows, " << domain_rows
                  << " outside the over-barrier domain, "
                  << res.count_flagged(flag_tau1_undefined) << " with undefined tau_1, "
                  << res.count_flagged(flag_phase_wrap) << " phase-wrap flags\n";
    }
    if (all_failed) {
        std::cerr << "error: every scan row lies outside the over-barrier domain\n";
        return exit_domain;
    }
    return exit_ok;
}

int cmd_resonances(const RunConfig& rc)
{
    const auto [cfg, E] = rc.barrier();
    std::vector<ResonanceSummary> rows;
    try {
        for (int m = 1; m <= rc.max_m; ++m)
            rows.push_back(resonance_summary(cfg, E, m));
    } catch (const UndefinedError& e) {
        std::cerr << "error: " << e.what()
                  << "\n(the reflection-delay peak and its half-width need k1 != k2, i.e. V1 != V2)\n";
        return exit_domain;
    }
    std::ostringstream os;
    write_resonance_csv(os, rows);
    std::cout << os.str();
    if (rc.want_csv()) {
        ensure_outdir(rc.outdir);
        write_file(rc.outdir / "resonances.csv", os.str());
    }
    return exit_ok;
}

int cmd_packet(const RunConfig& rc, bool check_bound)
{
    const double k0a = rc.packet.k0a.value_or(std::numbers::pi);
    auto [cfg, E] = rc.barrier(k0a);
    if (rc.units && rc.packet.k0a)
        cfg.a = k0a / wave_numbers(cfg, E).k0;

    double w = 0.0;
    if (rc.packet.w) {
        w = *rc.packet.w;
    } else {
        try {
            w = rc.packet.margin * minimum_packet_width(cfg, E);
        } catch (const UndefinedError& e) {
            std::cerr << "error: " << e.what() << "\n(give the packet width with --w)\n";
            return exit_domain;
        }
    }

    if (check_bound) {
        try {
            const double bound = packet_validity_bound(cfg, E, w);
            std::cout << "w = " << format_number(w) << "\n"
                      << "max_admissible_a = " << format_number(bound) << "\n"
                      << "a = " << format_number(cfg.a) << "\n"
                      << "restriction_satisfied = " << (cfg.a <= bound ? "yes" : "no") << "\n";
        } catch (const UndefinedError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_domain;
        }
        return exit_ok;
    }

    PacketSpec spec;
    try {
        spec = make_packet_spec(cfg, E, w, rc.packet.n_energy, rc.packet.n_time, rc.packet.energy_span);
        if (rc.packet.t_min)
            spec.t_min = *rc.packet.t_min;
        if (rc.packet.t_max)
            spec.t_max = *rc.packet.t_max;
        spec.validate(cfg);
    } catch (const ConstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }

    const auto profiles = synthesize_profiles(cfg, spec);
    const auto m = measure_profiles(cfg, spec, profiles);
    const auto rep = delay_report(cfg, E);

    if (!m.restriction_satisfied.value_or(false))
        std::cerr << "warning: thickness a = " << format_number(cfg.a)
                  << " violates the packet-width restriction; measured delays are unreliable\n";

    std::ostringstream sum;
    auto line = [&](const char* key, const std::string& v) { sum << key << " = " << v << "\n"; };
    line("E0", format_number(E));
    line("a", format_number(cfg.a));
    line("k0a", format_number(wave_numbers(cfg, E).k0 * cfg.a));
    line("w", format_number(spec.w));
    line("deltaE", format_number(spec.deltaE));
    line("tau_c", format_number(rep.tau_c));
    line("tau_t_analytic", format_number(rep.tau_t));
    line("tau_t_measured", format_number(m.tau_t_measured));
    line("tau_r_analytic", format_number(rep.tau_r));
    line("tau_r_measured", format_number(m.tau_r_measured));
    line("tau_t_centroid", format_number(m.tau_t_centroid));
    line("tau_r_centroid", format_number(m.tau_r_centroid));
    line("dt_grid", format_number(m.dt_grid));
    line("distortion_transmitted", format_number(m.distortion_transmitted));
    line("distortion_reflected", format_number(m.distortion_reflected));
    line("restriction_satisfied",
         m.restriction_satisfied ? (*m.restriction_satisfied ? "yes" : "no") : "undefined");
    line("status", m.reliable ? "reliable" : "unreliable");
    std::cout << sum.str();

    ensure_outdir(rc.outdir);
    write_file(rc.outdir / "packet_summary.txt", sum.str());
    if (rc.want_csv()) {
        std::ostringstream os;
        write_profiles_csv(os, profiles);
        write_file(rc.outdir / "packet.csv", os.str());
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Group delays of over-barrier scattering from an asymmetric rectangular barrier"};
    app.require_subcommand(1);
    Flags f;

    auto* scan = app.add_subcommand("scan", "thickness or energy sweep, figure data as CSV/SVG");
    add_barrier_flags(scan, f);
    scan->add_option("--mode", f.mode, "scan variable")->check(CLI::IsMember({"thickness", "energy"}));
    scan->add_option("--k0a-min", f.k0a_min, "scan start in k0*a");
    scan->add_option("--k0a-max", f.k0a_max, "scan end in k0*a");
    scan->add_option("--points", f.points, "number of grid points");
    scan->add_option("--out", f.outputs, "outputs: tau_t tau_r tau_1 T Tc phases");

    auto* res = app.add_subcommand("resonances", "tabulate resonances m = 1..M");
    add_barrier_flags(res, f);
    res->add_option("--max-m", f.max_m, "number of resonances")->check(CLI::PositiveNumber);

    auto* packet = app.add_subcommand("packet", "Gaussian wave-packet measurement of the delays");
    add_barrier_flags(packet, f);
    packet->add_option("--k0a", f.packet_k0a, "barrier thickness as k0*a (default pi)");
    packet->add_option("--margin", f.margin, "packet width as a multiple of the minimum admissible w");
    packet->add_option("--w", f.w, "packet time spread w (overrides --margin)");
    packet->add_option("--n-energy", f.n_energy, "spectral quadrature points");
    packet->add_option("--n-time", f.n_time, "time samples");
    packet->add_option("--span", f.span, "spectral half-range in units of deltaE");
    packet->add_option("--t-min", f.t_min, "time window start");
    packet->add_option("--t-max", f.t_max, "time window end");
    packet->add_flag("--check-bound", f.check_bound, "print the maximum admissible thickness and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        const auto rc = resolve(f);
        if (scan->parsed())
            return cmd_scan(rc);
        if (res->parsed())
            return cmd_resonances(rc);
        return cmd_packet(rc, f.check_bound);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
