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

#ifndef BARRIER_DELAY_IO_HPP
#define BARRIER_DELAY_IO_HPP

#include <barrier_delay/delays.hpp>
#include <barrier_delay/scan.hpp>
#include <barrier_delay/wavepacket.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace barrier_delay
{

/// Locale-independent %.12g; empty for a missing value.
inline std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0; // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

inline std::string format_number(const std::optional<double>& v)
{
    return v ? format_number(*v) : std::string{};
}

inline constexpr std::string_view scan_csv_header =
    "k0a,E,a,tau_t/tau_c,tau_1/tau_c,tau_r/tau_c,T,Tc,phi1_unwrapped,phi2_unwrapped,flags";

inline void write_scan_csv(std::ostream& os, const ScanResult& res)
{
    os << scan_csv_header << '\n';
    for (const auto& r : res.rows) {
        os << format_number(r.k0a) << ',' << format_number(r.E) << ',';
        if (r.flags & flag_domain)
            os << ',';
        else
            os << format_number(r.a) << ',';
        os << format_number(r.tau_t_rel) << ',' << format_number(r.tau_1_rel) << ','
           << format_number(r.tau_r_rel) << ',' << format_number(r.T) << ',' << format_number(r.Tc)
           << ',' << format_number(r.phi1_unwrapped) << ',' << format_number(r.phi2_unwrapped) << ','
           << flag_codes(r.flags) << '\n';
    }
}

inline constexpr std::string_view profile_csv_header = "t,|psi_in|^2,|psi_refl|^2,|psi_trans|^2";

inline void write_profiles_csv(std::ostream& os, const PacketProfiles& p)
{
    os << profile_csv_header << '\n';
    for (std::size_t i = 0; i < p.t.size(); ++i)
        os << format_number(p.t[i]) << ',' << format_number(p.incident[i]) << ','
           << format_number(p.reflected[i]) << ',' << format_number(p.transmitted[i]) << '\n';
}

inline constexpr std::string_view resonance_csv_header =
    "m,k0a,k0a_refined_peak,a,tau_c,tau_t_max/tau_c,tau_1_max/tau_c,tau_r/tau_c,T_max,delta_E";

inline void write_resonance_csv(std::ostream& os, std::span<const ResonanceSummary> rows)
{
    os << resonance_csv_header << '\n';
    for (const auto& s : rows)
        os << s.m << ',' << format_number(s.k0a_resonance) << ',' << format_number(s.k0a_at_peak) << ','
           << format_number(s.a) << ',' << format_number(s.tau_c) << ','
           << format_number(s.tau_t_max / s.tau_c) << ',' << format_number(s.tau_1_max / s.tau_c) << ','
           << format_number(s.tau_r_at_resonance / s.tau_c) << ',' << format_number(s.T_max) << ','
           << format_number(s.half_width_E) << '\n';
}

namespace detail
{

inline std::string svg_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

inline double nice_step(double span)
{
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double f : {1.0, 2.0, 5.0, 10.0})
        if (f * mag >= raw)
            return f * mag;
    return 10.0 * mag;
}

} // namespace detail

/// Single-series line chart. Missing y values break the polyline.
inline void write_svg_line_plot(std::ostream& os, std::span<const double> x,
                                std::span<const std::optional<double>> y, std::string_view x_label,
                                std::string_view y_label, std::string_view title)
{
    constexpr double width = 640.0, height = 420.0;
    constexpr double left = 70.0, right = 20.0, top = 36.0, bottom = 50.0;
    const double pw = width - left - right;
    const double ph = height - top - bottom;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!y[i] || !std::isfinite(*y[i]))
            continue;
        xmin = std::min(xmin, x[i]);
        xmax = std::max(xmax, x[i]);
        ymin = std::min(ymin, *y[i]);
        ymax = std::max(ymax, *y[i]);
    }
    if (!(xmin < xmax)) {
        xmin = 0.0;
        xmax = 1.0;
    }
    if (!(ymin < ymax)) {
        ymin = std::isfinite(ymin) ? ymin - 1.0 : 0.0;
        ymax = ymin + 2.0;
    }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    auto px = [&](double v) { return left + (v - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double v) { return top + (ymax - v) / (ymax - ymin) * ph; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"14\">" << detail::svg_escape(title) << "</text>\n";
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    const double xs = detail::nice_step(xmax - xmin);
    for (double v = std::ceil(xmin / xs) * xs; v <= xmax + 1e-9 * xs; v += xs) {
        os << "<line x1=\"" << format_number(px(v)) << "\" y1=\"" << top + ph << "\" x2=\""
           << format_number(px(v)) << "\" y2=\"" << top + ph + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << format_number(px(v)) << "\" y=\"" << top + ph + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
           << format_number(v) << "</text>\n";
    }
    const double ys = detail::nice_step(ymax - ymin);
    for (double v = std::ceil(ymin / ys) * ys; v <= ymax + 1e-9 * ys; v += ys) {
        os << "<line x1=\"" << left - 5 << "\" y1=\"" << format_number(py(v)) << "\" x2=\"" << left
           << "\" y2=\"" << format_number(py(v)) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << left - 8 << "\" y=\"" << format_number(py(v) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
           << format_number(std::abs(v) < 1e-12 * ys ? 0.0 : v) << "</text>\n";
    }
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       << detail::svg_escape(x_label) << "</text>\n";
    os << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"13\" transform=\"rotate(-90 16 " << top + ph / 2 << ")\">"
       << detail::svg_escape(y_label) << "</text>\n";

    bool open = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!y[i] || !std::isfinite(*y[i])) {
            if (open) {
                os << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
                open = false;
            }
            continue;
        }
        if (!open) {
            os << "<polyline points=\"";
            open = true;
        } else {
            os << ' ';
        }
        os << format_number(px(x[i])) << ',' << format_number(py(*y[i]));
    }
    if (open)
        os << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
    os << "</svg>\n";
}

/// SVG of one scan output against k0a.
inline void write_scan_svg(std::ostream& os, const ScanResult& res, ScanOutput which, std::string_view title)
{
    std::vector<double> x;
    std::vector<std::optional<double>> y;
    x.reserve(res.rows.size());
    y.reserve(res.rows.size());
    for (const auto& r : res.rows) {
        x.push_back(r.k0a);
        y.push_back(row_value(r, which));
    }
    std::string label;
    switch (which) {
    case ScanOutput::tau_t:
    case ScanOutput::tau_r:
    case ScanOutput::tau_1:
        label = std::string(to_string(which)) + "/tau_c";
        break;
    case ScanOutput::phases:
        label = "phi2 (unwrapped)";
        break;
    default:
        label = std::string(to_string(which));
    }
    write_svg_line_plot(os, x, y, "k0a", label, title);
}

} // namespace barrier_delay

#endif
