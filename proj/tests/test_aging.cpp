// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "mmkit/aging.hpp"
#include "mmkit/channel_models.hpp"
#include "mmkit/channel_trace.hpp"
#include "mmkit/detection.hpp"
#include "mmkit/errors.hpp"
#include "mmkit/scenario.hpp"

using mmkit::ChannelModelKind;
using mmkit::ChannelTrace;
using mmkit::CoherenceTime;
using mmkit::Complex;
using mmkit::CorrelationProfile;
using mmkit::DecoderKind;
using mmkit::ScenarioConfig;
using mmkit::TerminalTrajectory;
using mmkit::Vec3;

namespace {

ScenarioConfig crossing_los(std::size_t cols, std::size_t snapshots) {
    ScenarioConfig cfg;
    cfg.geometry = {1, cols, 0.5};
    cfg.terminals = {TerminalTrajectory{Vec3{-8.0, 22.0, 0.0}, Vec3{8.0, 0.0, 0.0}, 1}};
    cfg.model = ChannelModelKind::LosGeometric;
    cfg.num_snapshots = snapshots;
    return cfg;
}

ChannelTrace static_trace() {
    ScenarioConfig cfg = crossing_los(8, 30);
    cfg.terminals[0].velocity = Vec3{};
    return mmkit::generate_los(cfg);
}

} // namespace

TEST_SUITE("aging") {

TEST_CASE("correlation starts at one and stays there for a static channel") {
    const CorrelationProfile profile = mmkit::temporal_correlation(static_trace(), 20);
    REQUIRE(profile.values.size() == 21);
    REQUIRE(profile.lags.size() == 21);
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        CHECK(profile.values[i] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(profile.lags[i] == doctest::Approx(0.005 * static_cast<double>(i)));
    }
}

TEST_CASE("lag zero correlation is exactly one for any trace") {
    ScenarioConfig cfg = crossing_los(12, 40);
    cfg.model = ChannelModelKind::Jakes;
    cfg.doppler_hz = 18.0;
    cfg.rng_seed = 5;
    const CorrelationProfile profile =
        mmkit::temporal_correlation(mmkit::generate_jakes(cfg), 10);
    CHECK(profile.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    // correlation never exceeds one (Cauchy-Schwarz)
    for (double v : profile.values) {
        CHECK(v <= 1.0 + 1e-12);
    }
}

TEST_CASE("per-snapshot phase rotations do not move the correlation") {
    const ChannelTrace trace = mmkit::generate_los(crossing_los(10, 60));
    ChannelTrace rotated = trace;
    for (std::size_t t = 0; t < trace.num_snapshots; ++t) {
        const Complex phase = std::polar(1.0, 0.37 * static_cast<double>(t));
        for (std::size_t m = 0; m < trace.num_antennas; ++m) {
            rotated.at(t, 0, 0, m) *= phase;
        }
    }
    const CorrelationProfile a = mmkit::temporal_correlation(trace, 30);
    const CorrelationProfile b = mmkit::temporal_correlation(rotated, 30);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
    }
}

TEST_CASE("correlation matches a from-scratch geometric computation") {
    const ScenarioConfig cfg = crossing_los(100, 800);
    const ChannelTrace trace = mmkit::generate_los(cfg, 4);
    const CorrelationProfile profile = mmkit::temporal_correlation(trace, 50, 4);

    // rebuild the channel vectors from path lengths alone
    const double c_light = 299792458.0;
    const double f0 = c_light / cfg.carrier_wavelength;
    const double lambda0 = c_light / (f0 + 0.0 * cfg.block_bandwidth_hz);
    const double d = cfg.geometry.element_spacing * cfg.carrier_wavelength;
    const double x0 = -0.5 * static_cast<double>(cfg.geometry.cols_azimuth - 1);
    auto channel = [&](std::size_t t) {
        std::vector<Complex> h(cfg.geometry.cols_azimuth);
        const double px = -8.0 + 8.0 * 0.005 * static_cast<double>(t);
        for (std::size_t m = 0; m < h.size(); ++m) {
            const double ex = (x0 + static_cast<double>(m)) * d;
            const double dist = std::hypot(px - ex, 22.0);
            h[m] = std::polar(1.0, -2.0 * std::numbers::pi * dist / lambda0);
        }
        return h;
    };
    for (std::size_t lag : {1, 10, 50}) {
        double acc = 0.0;
        std::size_t count = 0;
        for (std::size_t t = 0; t + lag < cfg.num_snapshots; ++t) {
            const auto h0 = channel(t);
            const auto h1 = channel(t + lag);
            Complex ip{0.0, 0.0};
            double n0 = 0.0;
            double n1 = 0.0;
            for (std::size_t m = 0; m < h0.size(); ++m) {
                ip += h0[m] * std::conj(h1[m]);
                n0 += std::norm(h0[m]);
                n1 += std::norm(h1[m]);
            }
            acc += std::abs(ip) / std::sqrt(n0 * n1);
            ++count;
        }
        CHECK(profile.values[lag]
              == doctest::Approx(acc / static_cast<double>(count)).epsilon(1e-10));
    }
}

TEST_CASE("thread count does not change the profile") {
    const ChannelTrace trace = mmkit::generate_los(crossing_los(16, 100));
    const CorrelationProfile one = mmkit::temporal_correlation(trace, 40, 1);
    const CorrelationProfile many = mmkit::temporal_correlation(trace, 40, 8);
    CHECK(one.values == many.values);
    CHECK(one.lags == many.lags);
}

TEST_CASE("max lag must stay below the trace length") {
    const ChannelTrace trace = static_trace();
    CHECK_THROWS_AS(mmkit::temporal_correlation(trace, trace.num_snapshots),
                    mmkit::DimensionError);
    CHECK_NOTHROW(mmkit::temporal_correlation(trace, trace.num_snapshots - 1));
}

TEST_CASE("a zero snapshot is named in the error") {
    ChannelTrace trace = mmkit::generate_los(crossing_los(6, 12));
    for (std::size_t m = 0; m < trace.num_antennas; ++m) {
        trace.at(3, 0, 0, m) = Complex{0.0, 0.0};
    }
    CHECK_THROWS_WITH_AS(mmkit::temporal_correlation(trace, 4), doctest::Contains("t=3"),
                         mmkit::ConfigError);
}

TEST_CASE("crossing time interpolates between the bracketing lags") {
    CorrelationProfile profile;
    profile.lags = {0.0, 0.005, 0.010};
    profile.values = {1.0, 0.95, 0.85};
    const CoherenceTime ct = mmkit::coherence_time(profile, 0.9);
    CHECK(ct.crossed);
    CHECK(ct.seconds == doctest::Approx(0.0075).epsilon(1e-12));
}

TEST_CASE("a profile that never crosses yields infinity") {
    const CorrelationProfile profile =
        mmkit::temporal_correlation(static_trace(), 10);
    const CoherenceTime ct = mmkit::coherence_time(profile, 0.9);
    CHECK_FALSE(ct.crossed);
    CHECK(std::isinf(ct.seconds));
}

TEST_CASE("threshold is confined to the open unit interval") {
    CorrelationProfile profile;
    profile.lags = {0.0, 0.005};
    profile.values = {1.0, 0.5};
    CHECK_THROWS_AS(mmkit::coherence_time(profile, 0.0), mmkit::DimensionError);
    CHECK_THROWS_AS(mmkit::coherence_time(profile, 1.0), mmkit::DimensionError);
    CHECK_NOTHROW(mmkit::coherence_time(profile, 0.5001));
}

TEST_CASE("full-width d10 equals the whole-array coherence distance") {
    const ScenarioConfig cfg = crossing_los(25, 400);
    const ChannelTrace trace = mmkit::generate_los(cfg);
    const auto points = mmkit::d10_vs_azimuth(trace, {25}, 8.0, 399);
    REQUIRE(points.size() == 1);
    REQUIRE(points[0].crossed);

    const CorrelationProfile profile = mmkit::temporal_correlation(trace, 399);
    const CoherenceTime ct = mmkit::coherence_time(profile, 0.9);
    CHECK(points[0].distance_wavelengths == ct.seconds * 8.0 / trace.carrier_wavelength);
}

TEST_CASE("wider apertures decorrelate over shorter distances") {
    const ChannelTrace trace = mmkit::generate_los(crossing_los(25, 400), 4);
    const auto points = mmkit::d10_vs_azimuth(trace, {4, 8, 16, 25}, 8.0, 399, 4);
    REQUIRE(points.size() == 4);
    for (const auto& p : points) {
        CHECK(p.crossed);
        CHECK(p.m_azimuth >= 4);
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        CHECK(points[i].distance_wavelengths <= points[i - 1].distance_wavelengths);
    }
}

TEST_CASE("a static channel never reaches the decorrelation distance") {
    const auto points = mmkit::d10_vs_azimuth(static_trace(), {4, 8}, 8.0, 29);
    for (const auto& p : points) {
        CHECK_FALSE(p.crossed);
        CHECK(std::isinf(p.distance_wavelengths));
    }
}

TEST_CASE("d10 requires geometry, a speed and at least one size") {
    ChannelTrace trace = mmkit::generate_los(crossing_los(8, 20));
    ChannelTrace headless = trace;
    headless.geometry.reset();
    CHECK_THROWS_AS(mmkit::d10_vs_azimuth(headless, {4}, 8.0, 10), mmkit::ConfigError);
    CHECK_THROWS_AS(mmkit::d10_vs_azimuth(trace, {4}, 0.0, 10), mmkit::DimensionError);
    CHECK_THROWS_AS(mmkit::d10_vs_azimuth(trace, {}, 8.0, 10), mmkit::DimensionError);
}

TEST_CASE("the one-sample-delayed reference has ratio exactly one") {
    const ChannelTrace trace = mmkit::normalize(mmkit::generate_los(crossing_los(12, 40)));
    const auto curve = mmkit::expected_rate(trace, DecoderKind::Zf, 30.0, {1});
    REQUIRE(curve.gamma.size() == 1);
    CHECK(curve.gamma[0] == 1.0);
    CHECK(curve.deltas[0] == doctest::Approx(0.005));
}

TEST_CASE("a requested delay of zero maps onto the reference") {
    const ChannelTrace trace = mmkit::normalize(mmkit::generate_los(crossing_los(12, 40)));
    const auto curve = mmkit::expected_rate(trace, DecoderKind::Mf, 30.0, {0, 1});
    CHECK(curve.gamma[0] == 1.0);
    CHECK(curve.gamma[1] == 1.0);
    CHECK(curve.deltas[0] == curve.deltas[1]);
}

TEST_CASE("static channels keep the ratio at one for every age") {
    const ChannelTrace trace = mmkit::normalize(static_trace());
    for (DecoderKind kind : {DecoderKind::Zf, DecoderKind::Mf}) {
        const auto curve = mmkit::expected_rate(trace, kind, 30.0, {1, 2, 3, 4});
        for (double g : curve.gamma) {
            CHECK(g == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("zero forcing ages faster than matched filtering") {
    ScenarioConfig cfg = crossing_los(12, 120);
    cfg.terminals.push_back(TerminalTrajectory{Vec3{-4.0, 30.0, 0.0}, Vec3{8.0, 0.0, 0.0}, 1});
    cfg.terminals.push_back(TerminalTrajectory{Vec3{2.0, 38.0, 0.0}, Vec3{8.0, 0.0, 0.0}, 1});
    const ChannelTrace trace = mmkit::normalize(mmkit::generate_los(cfg));
    const auto zf = mmkit::expected_rate(trace, DecoderKind::Zf, 30.0, {1, 2, 3, 4});
    const auto mf = mmkit::expected_rate(trace, DecoderKind::Mf, 30.0, {1, 2, 3, 4});
    for (std::size_t i = 1; i < zf.gamma.size(); ++i) {
        CHECK(zf.gamma[i] <= zf.gamma[i - 1] + 1e-12);
    }
    CHECK(zf.gamma[3] < mf.gamma[3]);
    for (double g : zf.gamma) {
        CHECK(g <= 1.05);
        CHECK(g > 0.0);
    }
}

TEST_CASE("the ratio is the mean over shared points of two plain series") {
    const ChannelTrace trace = mmkit::normalize(mmkit::generate_los(crossing_los(12, 60)));
    const std::size_t delay = 3;
    const auto curve = mmkit::expected_rate(trace, DecoderKind::Zf, 30.0, {delay});

    const auto ref = mmkit::evaluate_series(trace, DecoderKind::Zf, 30.0, 1);
    const auto aged = mmkit::evaluate_series(trace, DecoderKind::Zf, 30.0, delay);
    double acc = 0.0;
    std::size_t count = 0;
    for (const auto& p : aged.points) {
        for (const auto& r : ref.points) {
            if (r.time_index == p.time_index && r.block_index == p.block_index) {
                acc += p.sum_rate / r.sum_rate;
                ++count;
            }
        }
    }
    REQUIRE(count == aged.points.size());
    CHECK(curve.gamma[0] == doctest::Approx(acc / static_cast<double>(count)).epsilon(1e-12));
}

} // TEST_SUITE
