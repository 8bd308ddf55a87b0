// SPDX-License-Identifier: Apache-2.0

#include "mmkit/channel_trace.hpp"

#include <cmath>
#include <string>

#include "mmkit/errors.hpp"

namespace mmkit {

ComplexMatrix ChannelTrace::snapshot(std::size_t t, std::size_t b) const {
    if (t >= num_snapshots || b >= num_blocks) {
        throw DimensionError("snapshot: (t=" + std::to_string(t) + ", b=" + std::to_string(b)
                             + ") out of range for T=" + std::to_string(num_snapshots)
                             + ", B=" + std::to_string(num_blocks));
    }
    ComplexMatrix h(num_streams, num_antennas);
    const std::size_t base = index(t, b, 0, 0);
    for (std::size_t k = 0; k < num_streams; ++k) {
        for (std::size_t m = 0; m < num_antennas; ++m) {
            h(k, m) = entries[base + k * num_antennas + m];
        }
    }
    return h;
}

void ChannelTrace::validate() const {
    if (num_snapshots == 0 || num_blocks == 0 || num_streams == 0 || num_antennas == 0) {
        throw DimensionError("trace: all dimensions must be at least 1");
    }
    const std::size_t expected = num_snapshots * num_blocks * num_streams * num_antennas;
    if (entries.size() != expected) {
        throw DimensionError("trace: entry count " + std::to_string(entries.size())
                             + " does not match dimensions (expected " + std::to_string(expected)
                             + ")");
    }
    if (sample_period_us == 0) {
        throw DimensionError("trace: sample period must be at least 1 microsecond");
    }
    if (!(carrier_wavelength > 0.0) || !std::isfinite(carrier_wavelength)) {
        throw DimensionError("trace: carrier wavelength must be positive and finite");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!std::isfinite(entries[i].real()) || !std::isfinite(entries[i].imag())) {
            throw NonFiniteData(i);
        }
    }
}

ChannelTrace normalize(const ChannelTrace& trace) {
    trace.validate();
    ChannelTrace out = trace;
    const std::size_t t_count = trace.num_snapshots;
    const std::size_t m_count = trace.num_antennas;
    for (std::size_t k = 0; k < trace.num_streams; ++k) {
        for (std::size_t b = 0; b < trace.num_blocks; ++b) {
            double acc = 0.0;
            for (std::size_t t = 0; t < t_count; ++t) {
                const std::size_t base = trace.index(t, b, k, 0);
                for (std::size_t m = 0; m < m_count; ++m) {
                    acc += std::norm(trace.entries[base + m]);
                }
            }
            const double mean_power = acc / (static_cast<double>(t_count) * m_count);
            if (mean_power == 0.0) {
                throw ConfigError("normalize: stream k=" + std::to_string(k) + " block b="
                                  + std::to_string(b) + " has zero power");
            }
            const double scale = std::sqrt(mean_power);
            for (std::size_t t = 0; t < t_count; ++t) {
                const std::size_t base = trace.index(t, b, k, 0);
                for (std::size_t m = 0; m < m_count; ++m) {
                    out.entries[base + m] /= scale;
                }
            }
        }
    }
    return out;
}

ChannelTrace antenna_subset(const ChannelTrace& trace, const std::vector<std::size_t>& antennas) {
    if (antennas.empty()) {
        throw DimensionError("antenna_subset: empty antenna list");
    }
    for (std::size_t m : antennas) {
        if (m >= trace.num_antennas) {
            throw DimensionError("antenna_subset: antenna " + std::to_string(m)
                                 + " out of range for M=" + std::to_string(trace.num_antennas));
        }
    }
    ChannelTrace out;
    out.num_snapshots = trace.num_snapshots;
    out.num_blocks = trace.num_blocks;
    out.num_streams = trace.num_streams;
    out.num_antennas = antennas.size();
    out.sample_period_us = trace.sample_period_us;
    out.carrier_wavelength = trace.carrier_wavelength;
    out.entries.resize(out.num_snapshots * out.num_blocks * out.num_streams * out.num_antennas);
    for (std::size_t t = 0; t < trace.num_snapshots; ++t) {
        for (std::size_t b = 0; b < trace.num_blocks; ++b) {
            for (std::size_t k = 0; k < trace.num_streams; ++k) {
                const std::size_t src = trace.index(t, b, k, 0);
                const std::size_t dst = out.index(t, b, k, 0);
                for (std::size_t j = 0; j < antennas.size(); ++j) {
                    out.entries[dst + j] = trace.entries[src + antennas[j]];
                }
            }
        }
    }
    return out;
}

std::vector<std::size_t> azimuth_prefix_indices(const ArrayGeometry& geometry,
                                                std::size_t azimuth_size) {
    if (azimuth_size < 1 || azimuth_size > geometry.cols_azimuth) {
        throw DimensionError("azimuth sub-array size " + std::to_string(azimuth_size)
                             + " out of range for " + std::to_string(geometry.cols_azimuth)
                             + " columns");
    }
    std::vector<std::size_t> idx;
    idx.reserve(geometry.rows_elevation * azimuth_size);
    for (std::size_t r = 0; r < geometry.rows_elevation; ++r) {
        for (std::size_t c = 0; c < azimuth_size; ++c) {
            idx.push_back(r * geometry.cols_azimuth + c);
        }
    }
    return idx;
}

ChannelTrace azimuth_subarray(const ChannelTrace& trace, std::size_t azimuth_size) {
    if (!trace.geometry) {
        throw ConfigError("azimuth_subarray: trace carries no array geometry");
    }
    ChannelTrace out = antenna_subset(trace, azimuth_prefix_indices(*trace.geometry, azimuth_size));
    ArrayGeometry sub = *trace.geometry;
    sub.cols_azimuth = azimuth_size;
    out.geometry = sub;
    return out;
}

} // namespace mmkit
