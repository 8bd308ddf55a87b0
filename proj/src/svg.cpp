// SPDX-License-Identifier: Apache-2.0

#include "mmkit/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "mmkit/errors.hpp"

namespace mmkit {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 56;
constexpr int kTicks = 5;

std::string num(double v, int precision = 6) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

std::string escape_text(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range padded(double lo, double hi) {
    if (!(hi > lo)) {
        const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
        return {lo - pad, hi + pad};
    }
    const double pad = (hi - lo) * 0.05;
    return {lo - pad, hi + pad};
}

} // namespace

std::string render_line_chart(const std::vector<SvgSeries>& series,
                              const SvgChartOptions& options) {
    if (series.empty()) {
        throw DimensionError("svg: no series to draw");
    }
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
    bool seen = false;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                continue;
            }
            if (!seen) {
                x_min = x_max = x;
                y_min = y_max = y;
                seen = true;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
    }
    if (!seen) {
        throw DimensionError("svg: no finite points to draw");
    }
    const Range xr = padded(x_min, x_max);
    const Range yr = padded(y_min, y_max);

    const double w = options.width;
    const double h = options.height;
    const double plot_w = w - kMarginLeft - kMarginRight;
    const double plot_h = h - kMarginTop - kMarginBottom;
    const auto px = [&](double x) { return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    const auto py = [&](double y) {
        return h - kMarginBottom - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
        << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height
        << "\">\n";
    svg << "<rect width=\"" << options.width << "\" height=\"" << options.height
        << "\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg << "<text x=\"" << num(w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"16\">" << escape_text(options.title)
            << "</text>\n";
    }

    // Grid, ticks and labels.
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i < kTicks; ++i) {
        const double f = static_cast<double>(i) / (kTicks - 1);
        const double xv = xr.lo + f * (xr.hi - xr.lo);
        const double yv = yr.lo + f * (yr.hi - yr.lo);
        const double xp = px(xv);
        const double yp = py(yv);
        svg << "<line x1=\"" << num(xp) << "\" y1=\"" << num(h - kMarginBottom) << "\" x2=\""
            << num(xp) << "\" y2=\"" << num(h - kMarginBottom + 5) << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << num(xp) << "\" y=\"" << num(h - kMarginBottom + 18)
            << "\" text-anchor=\"middle\">" << num(xv, 4) << "</text>\n";
        svg << "<line x1=\"" << num(kMarginLeft - 5) << "\" y1=\"" << num(yp) << "\" x2=\""
            << num(kMarginLeft) << "\" y2=\"" << num(yp) << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << num(kMarginLeft - 8) << "\" y=\"" << num(yp + 4)
            << "\" text-anchor=\"end\">" << num(yv, 4) << "</text>\n";
    }
    svg << "</g>\n";

    // Axes.
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << num(h - kMarginBottom) << "\" x2=\""
        << num(w - kMarginRight) << "\" y2=\"" << num(h - kMarginBottom)
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
        << "\" y2=\"" << num(h - kMarginBottom) << "\" stroke=\"black\"/>\n";
    if (!options.x_label.empty()) {
        svg << "<text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\"" << num(h - 12)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
            << escape_text(options.x_label) << "</text>\n";
    }
    if (!options.y_label.empty()) {
        svg << "<text x=\"18\" y=\"" << num(kMarginTop + plot_h / 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
            << "transform=\"rotate(-90 18 " << num(kMarginTop + plot_h / 2) << ")\">"
            << escape_text(options.y_label) << "</text>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
        bool first = true;
        for (const auto& [x, y] : series[s].points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                continue;
            }
            if (!first) {
                svg << " ";
            }
            svg << num(px(x)) << "," << num(py(y));
            first = false;
        }
        svg << "\"/>\n";
    }

    // Legend, top-right corner of the plot area.
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const double ly = kMarginTop + 14.0 + 18.0 * static_cast<double>(s);
        const double lx = w - kMarginRight - 150.0;
        svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 22)
            << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.8\"/>\n";
        svg << "<text x=\"" << num(lx + 28) << "\" y=\"" << num(ly) << "\">"
            << escape_text(series[s].label) << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace mmkit
