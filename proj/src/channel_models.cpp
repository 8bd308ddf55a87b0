// SPDX-License-Identifier: Apache-2.0

#include "mmkit/channel_models.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mmkit/errors.hpp"
#include "mmkit/parallel.hpp"

namespace mmkit {

namespace {

constexpr double kSpeedOfLight = 299792458.0; // m/s
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Vec3> element_positions(const ArrayGeometry& geo, double wavelength) {
    const double d = geo.element_spacing * wavelength;
    const double x0 = -0.5 * static_cast<double>(geo.cols_azimuth - 1);
    const double z0 = -0.5 * static_cast<double>(geo.rows_elevation - 1);
    std::vector<Vec3> pos;
    pos.reserve(geo.size());
    for (std::size_t r = 0; r < geo.rows_elevation; ++r) {
        for (std::size_t c = 0; c < geo.cols_azimuth; ++c) {
            pos.push_back(Vec3{(x0 + static_cast<double>(c)) * d, 0.0,
                               (z0 + static_cast<double>(r)) * d});
        }
    }
    return pos;
}

struct Stream {
    Vec3 origin;
    Vec3 velocity;
};

std::vector<Stream> stream_list(const ScenarioConfig& cfg) {
    std::vector<Stream> streams;
    streams.reserve(cfg.num_streams());
    for (const auto& term : cfg.terminals) {
        for (std::size_t a = 0; a < term.num_antennas; ++a) {
            Vec3 origin = term.initial_position;
            origin.x += static_cast<double>(a) * 0.5 * cfg.carrier_wavelength;
            streams.push_back(Stream{origin, term.velocity});
        }
    }
    return streams;
}

ChannelTrace empty_trace(const ScenarioConfig& cfg) {
    ChannelTrace trace;
    trace.num_snapshots = cfg.num_snapshots;
    trace.num_blocks = cfg.num_blocks;
    trace.num_streams = cfg.num_streams();
    trace.num_antennas = cfg.geometry.size();
    trace.sample_period_us = static_cast<std::uint32_t>(std::llround(cfg.sample_period * 1e6));
    trace.carrier_wavelength = cfg.carrier_wavelength;
    trace.geometry = cfg.geometry;
    trace.entries.resize(trace.num_snapshots * trace.num_blocks * trace.num_streams
                         * trace.num_antennas);
    return trace;
}

/// Uniform [0, 1) with a fixed bit-level derivation, so the stream is
/// identical on every platform.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

ChannelTrace generate_los(const ScenarioConfig& cfg, unsigned threads) {
    cfg.validate();
    if (cfg.model != ChannelModelKind::LosGeometric) {
        throw ConfigError("generate_los: config selects model '" + std::string(to_string(cfg.model))
                          + "'");
    }
    ChannelTrace trace = empty_trace(cfg);
    const std::vector<Vec3> elements = element_positions(cfg.geometry, cfg.carrier_wavelength);
    const std::vector<Stream> streams = stream_list(cfg);

    // Per-block wavelength from the carrier offset grid.
    const double f0 = kSpeedOfLight / cfg.carrier_wavelength;
    std::vector<double> block_wavelength(cfg.num_blocks);
    for (std::size_t b = 0; b < cfg.num_blocks; ++b) {
        block_wavelength[b] = kSpeedOfLight / (f0 + static_cast<double>(b) * cfg.block_bandwidth_hz);
    }

    const double ts = trace.sample_period();
    parallel_for(0, trace.num_snapshots, threads, [&](std::size_t t) {
        const double time = static_cast<double>(t) * ts;
        for (std::size_t b = 0; b < trace.num_blocks; ++b) {
            for (std::size_t k = 0; k < trace.num_streams; ++k) {
                const Vec3 pos = streams[k].origin + time * streams[k].velocity;
                const std::size_t base = trace.index(t, b, k, 0);
                for (std::size_t m = 0; m < trace.num_antennas; ++m) {
                    const double dist = norm(pos - elements[m]);
                    trace.entries[base + m] = std::polar(1.0, -kTwoPi * dist / block_wavelength[b]);
                }
            }
        }
    });
    return trace;
}

ChannelTrace generate_jakes(const ScenarioConfig& cfg, unsigned threads) {
    cfg.validate();
    if (cfg.model != ChannelModelKind::Jakes) {
        throw ConfigError("generate_jakes: config selects model '"
                          + std::string(to_string(cfg.model)) + "'");
    }
    ChannelTrace trace = empty_trace(cfg);
    const std::size_t n_sin = cfg.num_sinusoids;
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(n_sin));
    const double ts = trace.sample_period();

    // Doppler shift per sinusoid from uniformly spaced arrival angles.
    std::vector<double> omega(n_sin);
    for (std::size_t n = 0; n < n_sin; ++n) {
        const double angle = kTwoPi * (static_cast<double>(n) + 0.5) / static_cast<double>(n_sin);
        omega[n] = kTwoPi * cfg.doppler_hz * std::cos(angle);
    }

    const std::size_t paths = trace.num_blocks * trace.num_streams * trace.num_antennas;
    const std::uint32_t seed_lo = static_cast<std::uint32_t>(cfg.rng_seed & 0xffffffffu);
    const std::uint32_t seed_hi = static_cast<std::uint32_t>(cfg.rng_seed >> 32);

    parallel_for(0, paths, threads, [&](std::size_t p) {
        const std::size_t b = p / (trace.num_streams * trace.num_antennas);
        const std::size_t rem = p % (trace.num_streams * trace.num_antennas);
        const std::size_t k = rem / trace.num_antennas;
        const std::size_t m = rem % trace.num_antennas;

        std::seed_seq seq{seed_lo, seed_hi, static_cast<std::uint32_t>(b),
                          static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m)};
        std::mt19937_64 rng(seq);
        std::vector<double> phase(n_sin);
        for (std::size_t n = 0; n < n_sin; ++n) {
            phase[n] = kTwoPi * next_unit(rng);
        }
        for (std::size_t t = 0; t < trace.num_snapshots; ++t) {
            const double time = static_cast<double>(t) * ts;
            Complex acc{0.0, 0.0};
            for (std::size_t n = 0; n < n_sin; ++n) {
                acc += std::polar(1.0, omega[n] * time + phase[n]);
            }
            trace.entries[trace.index(t, b, k, m)] = amplitude * acc;
        }
    });
    return trace;
}

ChannelTrace generate(const ScenarioConfig& cfg, unsigned threads) {
    return cfg.model == ChannelModelKind::Jakes ? generate_jakes(cfg, threads)
                                                : generate_los(cfg, threads);
}

} // namespace mmkit
