// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace mmkit {

/// Natural cubic spline (zero second derivative at both ends). Passes
/// through every knot exactly; needs at least 3 knots with strictly
/// increasing x.
class CubicSpline {
public:
    CubicSpline(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;

    const std::vector<double>& knots_x() const { return x_; }
    const std::vector<double>& knots_y() const { return y_; }

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_; // second derivative at each knot
};

/// Smooth trend through scattered (x, y) points, sampled on a uniform grid
/// of `samples` locations spanning the knot range (endpoints included).
std::vector<std::pair<double, double>>
cubic_trend(const std::vector<std::pair<double, double>>& points, std::size_t samples = 200);

} // namespace mmkit
