// SPDX-License-Identifier: Apache-2.0

#include "mmkit/detection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmkit/errors.hpp"
#include "mmkit/parallel.hpp"

namespace mmkit {

namespace {

double median_of(std::vector<double> values) {
    const std::size_t n = values.size();
    std::sort(values.begin(), values.end());
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

} // namespace

const char* to_string(DecoderKind kind) {
    return kind == DecoderKind::Zf ? "zf" : "mf";
}

std::optional<DecoderKind> decoder_from_string(std::string_view name) {
    if (name == "zf") {
        return DecoderKind::Zf;
    }
    if (name == "mf") {
        return DecoderKind::Mf;
    }
    return std::nullopt;
}

ComplexMatrix decoder_matrix(const ComplexMatrix& h, DecoderKind kind, double pivot_tol) {
    const std::size_t k = h.rows();
    const std::size_t m = h.cols();
    if (k == 0 || m == 0) {
        throw DimensionError("decoder_matrix: empty channel matrix");
    }
    if (k > m) {
        throw DimensionError("decoder_matrix: K=" + std::to_string(k) + " exceeds M="
                             + std::to_string(m));
    }
    if (kind == DecoderKind::Mf) {
        ComplexMatrix w(k, m);
        const double inv_m = 1.0 / static_cast<double>(m);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                w(i, j) = std::conj(h(i, j)) * inv_m;
            }
        }
        return w;
    }
    const ComplexMatrix gram = matmul(h, hermitian(h));
    ComplexMatrix gram_inv;
    try {
        gram_inv = invert(gram, pivot_tol);
    } catch (const SingularMatrix& e) {
        throw SingularChannel("decoder_matrix: singular Gram matrix for K=" + std::to_string(k)
                              + " streams (pivot " + std::to_string(e.pivot_index()) + ")",
                              e.pivot_index());
    }
    return conjugate(matmul(gram_inv, h));
}

RatePoint sum_rate(const ComplexMatrix& h_now, const ComplexMatrix& w_then, double noise_power) {
    if (h_now.rows() != w_then.rows() || h_now.cols() != w_then.cols()) {
        throw DimensionError("sum_rate: channel is " + std::to_string(h_now.rows()) + "x"
                             + std::to_string(h_now.cols()) + " but decoder is "
                             + std::to_string(w_then.rows()) + "x" + std::to_string(w_then.cols()));
    }
    if (!(noise_power > 0.0)) {
        throw DimensionError("sum_rate: noise power must be positive");
    }
    const std::size_t k = h_now.rows();
    const std::size_t m = h_now.cols();
    RatePoint point;
    point.per_user_sinr.resize(k);
    point.per_user_rate.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        double signal = 0.0;
        double interference = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            Complex gain{0.0, 0.0};
            for (std::size_t c = 0; c < m; ++c) {
                gain += h_now(i, c) * w_then(j, c);
            }
            if (j == i) {
                signal = std::norm(gain);
            } else {
                interference += std::norm(gain);
            }
        }
        const double sinr = signal / (interference + noise_power);
        point.per_user_sinr[i] = sinr;
        point.per_user_rate[i] = std::log2(1.0 + sinr);
        point.sum_rate += point.per_user_rate[i];
    }
    return point;
}

RateSeries evaluate_series(const ChannelTrace& trace, DecoderKind kind, double snr_db,
                           std::size_t delta_samples, bool exact_delta, unsigned threads) {
    const std::size_t delay = exact_delta ? delta_samples : std::max<std::size_t>(delta_samples, 1);
    if (delay >= trace.num_snapshots) {
        throw DimensionError("evaluate_series: delay of " + std::to_string(delay)
                             + " samples needs more than " + std::to_string(trace.num_snapshots)
                             + " snapshots");
    }
    RateSeries series;
    series.decoder = kind;
    series.delta_samples = delay;
    series.snr_db = snr_db;
    series.noise_power = std::pow(10.0, -snr_db / 10.0);

    const std::size_t n_time = trace.num_snapshots - delay;
    const std::size_t n_blocks = trace.num_blocks;
    series.points.resize(n_time * n_blocks);
    parallel_for(0, n_time, threads, [&](std::size_t i) {
        const std::size_t t = delay + i;
        for (std::size_t b = 0; b < n_blocks; ++b) {
            const ComplexMatrix w = decoder_matrix(trace.snapshot(t - delay, b), kind);
            RatePoint point = sum_rate(trace.snapshot(t, b), w, series.noise_power);
            point.time_index = t;
            point.block_index = b;
            series.points[i * n_blocks + b] = std::move(point);
        }
    });
    return series;
}

RateSummary summarize(const RateSeries& series, std::size_t cdf_bins) {
    if (series.points.empty()) {
        throw DimensionError("summarize: empty series");
    }
    RateSummary summary;

    std::vector<double> rates;
    rates.reserve(series.points.size());
    for (const auto& p : series.points) {
        rates.push_back(p.sum_rate);
    }
    summary.median_sum_rate = median_of(rates);

    const std::size_t users = series.points.front().per_user_rate.size();
    std::vector<double> user_medians(users);
    std::vector<double> scratch(series.points.size());
    for (std::size_t u = 0; u < users; ++u) {
        for (std::size_t i = 0; i < series.points.size(); ++i) {
            scratch[i] = series.points[i].per_user_rate[u];
        }
        user_medians[u] = median_of(scratch);
    }
    summary.median_per_user_rate = median_of(user_medians);

    double sinr_acc = 0.0;
    for (const auto& p : series.points) {
        for (double s : p.per_user_sinr) {
            sinr_acc += s;
        }
    }
    summary.mean_sinr_db =
        10.0 * std::log10(sinr_acc / (static_cast<double>(series.points.size()) * users));

    std::sort(rates.begin(), rates.end());
    const double lo = rates.front();
    const double hi = rates.back();
    const double n = static_cast<double>(rates.size());
    if (hi == lo) {
        summary.cdf.emplace_back(lo, 1.0);
    } else {
        const std::size_t bins = std::max<std::size_t>(cdf_bins, 2);
        summary.cdf.reserve(bins);
        for (std::size_t r = 0; r < bins; ++r) {
            const double x = lo + (hi - lo) * static_cast<double>(r) / static_cast<double>(bins - 1);
            const auto upper = std::upper_bound(rates.begin(), rates.end(), x);
            summary.cdf.emplace_back(x, static_cast<double>(upper - rates.begin()) / n);
        }
    }
    return summary;
}

} // namespace mmkit
