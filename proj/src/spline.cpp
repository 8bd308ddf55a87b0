// SPDX-License-Identifier: Apache-2.0

#include "mmkit/spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmkit/errors.hpp"

namespace mmkit {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : x_(std::move(xs)), y_(std::move(ys)) {
    const std::size_t n = x_.size();
    if (n < 3) {
        throw DimensionError("spline: need at least 3 knots, got " + std::to_string(n));
    }
    if (y_.size() != n) {
        throw DimensionError("spline: " + std::to_string(n) + " x values but "
                             + std::to_string(y_.size()) + " y values");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
            throw DimensionError("spline: knot " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && !(x_[i] > x_[i - 1])) {
            throw DimensionError("spline: x values must be strictly increasing (knot "
                                 + std::to_string(i) + ")");
        }
    }

    // Thomas solve of the interior tridiagonal system; natural boundary
    // conditions pin the end second derivatives to zero.
    m_.assign(n, 0.0);
    const std::size_t interior = n - 2;
    std::vector<double> diag(interior), upper(interior), rhs(interior);
    for (std::size_t i = 0; i < interior; ++i) {
        const double h0 = x_[i + 1] - x_[i];
        const double h1 = x_[i + 2] - x_[i + 1];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((y_[i + 2] - y_[i + 1]) / h1 - (y_[i + 1] - y_[i]) / h0);
    }
    for (std::size_t i = 1; i < interior; ++i) {
        const double lower = x_[i + 1] - x_[i];
        const double w = lower / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    if (interior > 0) {
        m_[interior] = rhs[interior - 1] / diag[interior - 1];
        for (std::size_t i = interior - 1; i > 0; --i) {
            m_[i] = (rhs[i - 1] - upper[i - 1] * m_[i + 1]) / diag[i - 1];
        }
    }
}

double CubicSpline::operator()(double x) const {
    const std::size_t n = x_.size();
    // Interval lookup; points outside the range use the boundary cubic.
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(x_.begin(), x_.end(), x) - x_.begin());
    i = i == 0 ? 0 : i - 1;
    i = std::min(i, n - 2);

    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1]
           + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

std::vector<std::pair<double, double>>
cubic_trend(const std::vector<std::pair<double, double>>& points, std::size_t samples) {
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [x, y] : points) {
        xs.push_back(x);
        ys.push_back(y);
    }
    const CubicSpline spline(std::move(xs), std::move(ys));
    const double x0 = spline.knots_x().front();
    const double x1 = spline.knots_x().back();
    const std::size_t n = std::max<std::size_t>(samples, 2);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(n - 1);
        curve.emplace_back(x, spline(x));
    }
    return curve;
}

} // namespace mmkit
