// SPDX-License-Identifier: Apache-2.0

#include "mmkit/aging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mmkit/errors.hpp"
#include "mmkit/parallel.hpp"

namespace mmkit {

namespace {

/// |h(t, b, k)| for every (t, b, k).
std::vector<double> snapshot_norms(const ChannelTrace& trace) {
    std::vector<double> norms(trace.num_snapshots * trace.num_blocks * trace.num_streams);
    std::size_t out = 0;
    for (std::size_t t = 0; t < trace.num_snapshots; ++t) {
        for (std::size_t b = 0; b < trace.num_blocks; ++b) {
            for (std::size_t k = 0; k < trace.num_streams; ++k) {
                const std::size_t base = trace.index(t, b, k, 0);
                double acc = 0.0;
                for (std::size_t m = 0; m < trace.num_antennas; ++m) {
                    acc += std::norm(trace.entries[base + m]);
                }
                norms[out++] = std::sqrt(acc);
            }
        }
    }
    return norms;
}

double correlation_at_lag(const ChannelTrace& trace, const std::vector<double>& norms,
                          std::size_t lag) {
    const std::size_t per_t = trace.num_blocks * trace.num_streams;
    double acc = 0.0;
    std::size_t count = 0;
    for (std::size_t t = 0; t + lag < trace.num_snapshots; ++t) {
        for (std::size_t b = 0; b < trace.num_blocks; ++b) {
            for (std::size_t k = 0; k < trace.num_streams; ++k) {
                const std::size_t base0 = trace.index(t, b, k, 0);
                const std::size_t base1 = trace.index(t + lag, b, k, 0);
                Complex ip{0.0, 0.0};
                for (std::size_t m = 0; m < trace.num_antennas; ++m) {
                    ip += trace.entries[base0 + m] * std::conj(trace.entries[base1 + m]);
                }
                const double n0 = norms[t * per_t + b * trace.num_streams + k];
                const double n1 = norms[(t + lag) * per_t + b * trace.num_streams + k];
                if (n0 == 0.0 || n1 == 0.0) {
                    throw ConfigError("temporal_correlation: zero-norm snapshot at t="
                                      + std::to_string(n0 == 0.0 ? t : t + lag) + ", b="
                                      + std::to_string(b) + ", k=" + std::to_string(k));
                }
                acc += std::abs(ip) / (n0 * n1);
                ++count;
            }
        }
    }
    return acc / static_cast<double>(count);
}

} // namespace

CorrelationProfile temporal_correlation(const ChannelTrace& trace, std::size_t max_lag,
                                        unsigned threads) {
    trace.validate();
    if (max_lag >= trace.num_snapshots) {
        throw DimensionError("temporal_correlation: max_lag " + std::to_string(max_lag)
                             + " must be below T=" + std::to_string(trace.num_snapshots));
    }
    const std::vector<double> norms = snapshot_norms(trace);
    CorrelationProfile profile;
    profile.lags.resize(max_lag + 1);
    profile.values.resize(max_lag + 1);
    const double ts = trace.sample_period();
    // One lag per task keeps each sum in a fixed order for any thread count.
    parallel_for(0, max_lag + 1, threads, [&](std::size_t lag) {
        profile.lags[lag] = static_cast<double>(lag) * ts;
        profile.values[lag] = correlation_at_lag(trace, norms, lag);
    });
    return profile;
}

CoherenceTime coherence_time(const CorrelationProfile& profile, double threshold) {
    if (profile.values.empty() || profile.values.size() != profile.lags.size()) {
        throw DimensionError("coherence_time: malformed profile");
    }
    if (!(threshold > 0.0) || !(threshold < 1.0)) {
        throw DimensionError("coherence_time: threshold must be inside (0, 1)");
    }
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        if (profile.values[i] < threshold) {
            if (i == 0) {
                return {profile.lags[0], true};
            }
            const double v0 = profile.values[i - 1];
            const double v1 = profile.values[i];
            const double frac = (v0 - threshold) / (v0 - v1);
            return {profile.lags[i - 1] + frac * (profile.lags[i] - profile.lags[i - 1]), true};
        }
    }
    return {std::numeric_limits<double>::infinity(), false};
}

std::vector<D10Point> d10_vs_azimuth(const ChannelTrace& trace,
                                     const std::vector<std::size_t>& azimuth_sizes, double speed,
                                     std::size_t max_lag, unsigned threads) {
    if (!trace.geometry) {
        throw ConfigError("d10_vs_azimuth: trace carries no array geometry");
    }
    if (!(speed > 0.0)) {
        throw DimensionError("d10_vs_azimuth: speed must be positive");
    }
    if (azimuth_sizes.empty()) {
        throw DimensionError("d10_vs_azimuth: no sub-array sizes given");
    }
    constexpr double kThreshold = 0.9; // 10% decay
    const std::size_t lag_limit = std::min(max_lag, trace.num_snapshots - 1);

    std::vector<D10Point> points(azimuth_sizes.size());
    parallel_for(0, azimuth_sizes.size(), threads, [&](std::size_t s) {
        const ChannelTrace sub = azimuth_subarray(trace, azimuth_sizes[s]);
        const std::vector<double> norms = snapshot_norms(sub);
        const double ts = sub.sample_period();

        // Scan lags in order and stop at the first crossing; the profile
        // prefix is enough for the interpolated crossing point.
        CorrelationProfile prefix;
        bool crossed = false;
        for (std::size_t lag = 0; lag <= lag_limit; ++lag) {
            prefix.lags.push_back(static_cast<double>(lag) * ts);
            prefix.values.push_back(correlation_at_lag(sub, norms, lag));
            if (prefix.values.back() < kThreshold) {
                crossed = true;
                break;
            }
        }
        D10Point point;
        point.m_azimuth = azimuth_sizes[s];
        if (crossed) {
            const CoherenceTime ct = coherence_time(prefix, kThreshold);
            point.distance_wavelengths = ct.seconds * speed / trace.carrier_wavelength;
            point.crossed = true;
        } else {
            point.distance_wavelengths = std::numeric_limits<double>::infinity();
            point.crossed = false;
        }
        points[s] = point;
    });
    return points;
}

ExpectedRateCurve expected_rate(const ChannelTrace& trace, DecoderKind kind, double snr_db,
                                const std::vector<std::size_t>& delta_samples, unsigned threads) {
    const RateSeries reference = evaluate_series(trace, kind, snr_db, 1, false, threads);
    const std::size_t n_blocks = trace.num_blocks;

    ExpectedRateCurve curve;
    curve.decoder = kind;
    for (std::size_t requested : delta_samples) {
        const std::size_t delay = std::max<std::size_t>(requested, 1);
        const RateSeries series = delay == 1
                                      ? reference
                                      : evaluate_series(trace, kind, snr_db, delay, false, threads);
        double acc = 0.0;
        std::size_t count = 0;
        for (const RatePoint& p : series.points) {
            const RatePoint& ref = reference.points[(p.time_index - 1) * n_blocks + p.block_index];
            if (ref.sum_rate > 0.0) {
                acc += p.sum_rate / ref.sum_rate;
                ++count;
            }
        }
        if (count == 0) {
            throw DimensionError("expected_rate: reference sum rate is identically zero");
        }
        curve.deltas.push_back(static_cast<double>(delay) * trace.sample_period());
        curve.gamma.push_back(acc / static_cast<double>(count));
    }
    return curve;
}

} // namespace mmkit
