// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "mmkit/channel_trace.hpp"
#include "mmkit/detection.hpp"

namespace mmkit {

struct CorrelationProfile {
    std::vector<double> lags;   // seconds
    std::vector<double> values; // mean normalized correlation, 1 at lag 0
};

struct CoherenceTime {
    double seconds = 0.0; // +infinity when the profile never crosses
    bool crossed = false;
};

struct D10Point {
    std::size_t m_azimuth = 0;
    double distance_wavelengths = 0.0; // +infinity when never crossed
    bool crossed = false;
};

struct ExpectedRateCurve {
    DecoderKind decoder = DecoderKind::Zf;
    std::vector<double> deltas; // seconds
    std::vector<double> gamma;  // mean of pointwise C_delta / C_reference
};

/// Mean over streams, blocks and time of the normalized inner product
/// |<h(t), h(t+lag)>| / (|h(t)| |h(t+lag)|) for lags 0..max_lag.
CorrelationProfile temporal_correlation(const ChannelTrace& trace, std::size_t max_lag,
                                        unsigned threads = 1);

/// First lag where the profile drops below threshold, linearly interpolated
/// between the bracketing lags. Never crossing yields +infinity and a flag.
CoherenceTime coherence_time(const CorrelationProfile& profile, double threshold);

/// Distance (in carrier wavelengths) a terminal moves before the sub-array
/// correlation decays by 10%, for each leftmost azimuth sub-array size.
/// Requires the trace to carry its array geometry.
std::vector<D10Point> d10_vs_azimuth(const ChannelTrace& trace,
                                     const std::vector<std::size_t>& azimuth_sizes, double speed,
                                     std::size_t max_lag, unsigned threads = 1);

/// Rate ratio gamma(delta) = E[C_delta / C_ref] where the reference decoder
/// is one sample old (the most recent usable estimate) and the mean runs
/// over the (t, b) points both series share. Deltas are in samples.
ExpectedRateCurve expected_rate(const ChannelTrace& trace, DecoderKind kind, double snr_db,
                                const std::vector<std::size_t>& delta_samples,
                                unsigned threads = 1);

} // namespace mmkit
