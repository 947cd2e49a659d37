// SPDX-License-Identifier: Apache-2.0
//
// relaysim: link-level simulator for dual-hop AF MIMO relay networks
// Copyright (C) 2026 The relaysim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "relaysim/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace relaysim
{
namespace
{

struct Series
{
    std::string label;
    std::vector<double> x, y, err;
};

std::vector<Series> collect_series(std::span<const SweepRow> rows)
{
    std::vector<Series> out;
    for (const SweepRow& row : rows)
    {
        const std::string label(row.estimate.label());
        auto it = std::find_if(out.begin(), out.end(), [&](const Series& s) { return s.label == label; });
        if (it == out.end())
        {
            out.push_back({label, {}, {}, {}});
            it = out.end() - 1;
        }
        it->x.push_back(row.axis_value);
        it->y.push_back(row.estimate.mean_bits);
        it->err.push_back(row.estimate.stderr_bits.value_or(0.0));
    }
    return out;
}

// Round-number tick step giving roughly `target` intervals over `span`.
double tick_step(double span, int target)
{
    if (!(span > 0.0))
        return 1.0;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double f : {1.0, 2.0, 2.5, 5.0, 10.0})
    {
        if (f * mag >= raw)
            return f * mag;
    }
    return 10.0 * mag;
}

std::string fixed(double v, int digits = 2)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

std::string escape_xml(std::string_view text)
{
    std::string out;
    for (char c : text)
    {
        switch (c)
        {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

} // namespace

std::string format_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string_view axis_caption(SweepAxis axis) noexcept
{
    switch (axis)
    {
    case SweepAxis::relay_count:
        return "Number of relay nodes K";
    case SweepAxis::pnr_db:
        return "PNR (dB)";
    case SweepAxis::qnr_db:
        return "QNR (dB)";
    case SweepAxis::pnr_equals_qnr_db:
        return "PNR = QNR (dB)";
    }
    return "";
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows)
{
    out << kCsvHeader << '\n';
    for (const SweepRow& r : rows)
    {
        out << r.estimate.label() << ',' << to_string(r.axis) << ',' << format_number(r.axis_value) << ','
            << r.point.m << ',' << r.point.n << ',' << r.point.k << ',' << format_number(r.point.pnr_db) << ','
            << format_number(r.point.qnr_db) << ',' << format_number(r.point.alpha) << ',' << r.estimate.trials
            << ',' << r.seed << ',' << format_number(r.estimate.mean_bits) << ',';
        if (r.estimate.stderr_bits)
            out << format_number(*r.estimate.stderr_bits);
        out << '\n';
    }
}

std::string to_csv(std::span<const SweepRow> rows)
{
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

std::string render_svg(std::span<const SweepRow> rows, std::string_view title)
{
    if (rows.empty())
        throw std::invalid_argument("render_svg: empty result table");
    const std::vector<Series> series = collect_series(rows);

    double x_min = rows.front().axis_value, x_max = x_min;
    double y_max = 0.0;
    for (const Series& s : series)
    {
        for (std::size_t i = 0; i < s.x.size(); ++i)
        {
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            y_max = std::max(y_max, s.y[i] + s.err[i]);
        }
    }
    if (x_max == x_min)
    {
        x_min -= 1.0;
        x_max += 1.0;
    }
    const double y_step = tick_step(y_max > 0.0 ? y_max : 1.0, 6);
    const double y_top = std::max(y_step, std::ceil(y_max / y_step) * y_step);
    const double x_step = tick_step(x_max - x_min, 8);

    const double width = 760, height = 500;
    const double left = 80, right = 170, top = 50, bottom = 70;
    const double plot_w = width - left - right, plot_h = height - top - bottom;
    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + plot_h - y / y_top * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
    {
        svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"14\">"
            << escape_xml(title) << "</text>\n";
    }

    // Grid and ticks.
    svg << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double y = 0.0; y <= y_top + 1e-9 * y_top; y += y_step)
        svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(py(y)) << "\" x2=\"" << fixed(left + plot_w)
            << "\" y2=\"" << fixed(py(y)) << "\"/>\n";
    const double x_first = std::ceil(x_min / x_step) * x_step;
    for (double x = x_first; x <= x_max + 1e-9 * std::abs(x_max) + 1e-12; x += x_step)
        svg << "<line x1=\"" << fixed(px(x)) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(px(x))
            << "\" y2=\"" << fixed(top + plot_h) << "\"/>\n";
    svg << "</g>\n";
    svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double y = 0.0; y <= y_top + 1e-9 * y_top; y += y_step)
        svg << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(py(y) + 4)
            << "\" text-anchor=\"end\">" << format_number(std::round(y * 1e6) / 1e6) << "</text>\n";
    for (double x = x_first; x <= x_max + 1e-9 * std::abs(x_max) + 1e-12; x += x_step)
        svg << "<text x=\"" << fixed(px(x)) << "\" y=\"" << fixed(top + plot_h + 18)
            << "\" text-anchor=\"middle\">" << format_number(std::round(x * 1e6) / 1e6) << "</text>\n";

    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 20 << "\" text-anchor=\"middle\">"
        << escape_xml(axis_caption(rows.front().axis)) << "</text>\n";
    svg << "<text transform=\"translate(24 " << top + plot_h / 2
        << ") rotate(-90)\" text-anchor=\"middle\">Ergodic capacity (bits/channel use)</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i)
    {
        const Series& s = series[i];
        const char* color = kPalette[i % std::size(kPalette)];
        const bool dashed = s.label == kUpperBoundLabel;
        svg << "<g class=\"series\" data-label=\"" << escape_xml(s.label) << "\">\n";
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\""
            << (dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
        for (std::size_t j = 0; j < s.x.size(); ++j)
            svg << (j ? " " : "") << fixed(px(s.x[j])) << ',' << fixed(py(s.y[j]));
        svg << "\"/>\n";
        for (std::size_t j = 0; j < s.x.size(); ++j)
        {
            const double cx = px(s.x[j]);
            svg << "<line class=\"errorbar\" x1=\"" << fixed(cx) << "\" y1=\"" << fixed(py(s.y[j] - s.err[j]))
                << "\" x2=\"" << fixed(cx) << "\" y2=\"" << fixed(py(s.y[j] + s.err[j])) << "\" stroke=\""
                << color << "\"/>\n";
            svg << "<circle cx=\"" << fixed(cx) << "\" cy=\"" << fixed(py(s.y[j])) << "\" r=\"3\" fill=\""
                << color << "\"/>\n";
        }
        svg << "</g>\n";

        const double ly = top + 16 + 20.0 * static_cast<double>(i);
        const double lx = left + plot_w + 16;
        svg << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 24 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "")
            << "/>\n";
        svg << "<text class=\"legend\" x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\">" << escape_xml(s.label)
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_plot(std::span<const SweepRow> rows, const std::filesystem::path& path, std::string_view title)
{
    const std::string doc = render_svg(rows, title);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path.string() + ": cannot open plot file for writing");
    out << doc;
    if (!out.flush())
        throw std::runtime_error(path.string() + ": failed writing plot file");
}

} // namespace relaysim
