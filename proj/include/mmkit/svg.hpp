// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mmkit {

struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct SvgChartOptions {
    int width = 800;
    int height = 500;
    std::string title;
    std::string x_label;
    std::string y_label;
};

/// Self-contained SVG line chart: axes with ticks, one polyline per series
/// and a legend. Non-finite points are skipped.
std::string render_line_chart(const std::vector<SvgSeries>& series, const SvgChartOptions& options);

} // namespace mmkit
