// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mmkit/channel_trace.hpp"
#include "mmkit/linalg.hpp"

namespace mmkit {

enum class DecoderKind { Zf, Mf };

const char* to_string(DecoderKind kind);
std::optional<DecoderKind> decoder_from_string(std::string_view name);

/// Uplink rates of one (snapshot, block) under a possibly stale decoder.
struct RatePoint {
    std::size_t time_index = 0;
    std::size_t block_index = 0;
    double sum_rate = 0.0;             // bits/s/Hz
    std::vector<double> per_user_sinr; // linear
    std::vector<double> per_user_rate; // bits/s/Hz
};

struct RateSeries {
    DecoderKind decoder = DecoderKind::Zf;
    std::size_t delta_samples = 1; // decoder delay actually applied, in samples
    double snr_db = 0.0;
    double noise_power = 1.0;
    std::vector<RatePoint> points; // t-major, then block
};

struct RateSummary {
    double median_sum_rate = 0.0;
    double median_per_user_rate = 0.0;
    double mean_sinr_db = 0.0;
    std::vector<std::pair<double, double>> cdf; // (sum rate, P[rate <= x])
};

/// K x M decoder with rows w_i such that the decode of stream i is
/// h_i * w_i^T. Zero forcing inverts the Gram matrix H H^H (rank-deficient
/// user sets raise SingularChannel); matched filtering is the conjugate
/// channel scaled by 1/M so a lone unit-power user decodes to exactly 1.
ComplexMatrix decoder_matrix(const ComplexMatrix& h, DecoderKind kind, double pivot_tol = 1e-12);

/// Rates for current channel h_now decoded with weights w_then:
/// SINR_i = |h_i w_i^T|^2 / (sum_{j != i} |h_i w_j^T|^2 + noise_power).
RatePoint sum_rate(const ComplexMatrix& h_now, const ComplexMatrix& w_then, double noise_power);

/// Applies a decoder that is delta_samples old to every (snapshot, block).
/// By convention a requested delay of 0 still uses the previous snapshot
/// (the decoder cannot be newer than the last estimate); pass exact_delta to
/// lift that and evaluate a same-snapshot decoder. Noise power is
/// 10^(-snr_db/10), which assumes a normalized trace.
RateSeries evaluate_series(const ChannelTrace& trace, DecoderKind kind, double snr_db,
                           std::size_t delta_samples, bool exact_delta = false,
                           unsigned threads = 1);

/// Median sum rate, median over users of per-user time-median rates, mean
/// SINR in dB, and an evenly binned empirical CDF of the sum rate.
RateSummary summarize(const RateSeries& series, std::size_t cdf_bins = 512);

} // namespace mmkit
