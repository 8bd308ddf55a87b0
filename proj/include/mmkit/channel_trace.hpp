// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mmkit/linalg.hpp"
#include "mmkit/scenario.hpp"

namespace mmkit {

/// Channel coefficients over time, frequency blocks, user streams and
/// base-station antennas. Entries are stored t-major, then block, stream,
/// antenna. The sample period is kept in integer microseconds so a trace
/// survives serialization bit-exactly.
struct ChannelTrace {
    std::size_t num_snapshots = 0; // T
    std::size_t num_blocks = 0;    // B
    std::size_t num_streams = 0;   // K
    std::size_t num_antennas = 0;  // M
    std::uint32_t sample_period_us = 5000;
    double carrier_wavelength = 0.081;
    std::optional<ArrayGeometry> geometry; // in-memory only, not serialized
    std::vector<Complex> entries;

    double sample_period() const { return sample_period_us * 1e-6; }

    std::size_t index(std::size_t t, std::size_t b, std::size_t k, std::size_t m) const {
        return ((t * num_blocks + b) * num_streams + k) * num_antennas + m;
    }
    Complex& at(std::size_t t, std::size_t b, std::size_t k, std::size_t m) {
        return entries[index(t, b, k, m)];
    }
    const Complex& at(std::size_t t, std::size_t b, std::size_t k, std::size_t m) const {
        return entries[index(t, b, k, m)];
    }

    /// K x M channel matrix of one (snapshot, block).
    ComplexMatrix snapshot(std::size_t t, std::size_t b) const;

    /// Throws if dimensions, entry count or finiteness are off.
    void validate() const;
};

/// Scales each (stream, block) so its per-antenna power averaged over the
/// whole trace is one. Throws ConfigError naming (k, b) on an all-zero
/// stream.
ChannelTrace normalize(const ChannelTrace& trace);

/// New trace holding only the listed antennas (order preserved).
ChannelTrace antenna_subset(const ChannelTrace& trace, const std::vector<std::size_t>& antennas);

/// Antenna indices of the leftmost azimuth_size columns across all
/// elevation rows.
std::vector<std::size_t> azimuth_prefix_indices(const ArrayGeometry& geometry,
                                                std::size_t azimuth_size);

/// Sub-trace over the leftmost azimuth_size columns; requires the trace to
/// carry its array geometry.
ChannelTrace azimuth_subarray(const ChannelTrace& trace, std::size_t azimuth_size);

} // namespace mmkit
