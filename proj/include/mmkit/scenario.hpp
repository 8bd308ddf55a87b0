// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mmkit {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

/// Planar base-station array in the x-z plane, centered on the origin.
/// Azimuth runs along x (fast antenna index), elevation along z; antenna
/// m maps to (row, col) = (m / cols_azimuth, m % cols_azimuth).
struct ArrayGeometry {
    std::size_t rows_elevation = 1;
    std::size_t cols_azimuth = 1;
    double element_spacing = 0.5; // in carrier wavelengths

    std::size_t size() const { return rows_elevation * cols_azimuth; }
};

/// Straight-line constant-velocity terminal. A dual-antenna terminal
/// contributes two independent streams; its second antenna sits half a
/// wavelength further along x.
struct TerminalTrajectory {
    Vec3 initial_position; // meters
    Vec3 velocity;         // m/s
    std::size_t num_antennas = 1;
};

enum class ChannelModelKind { LosGeometric, Jakes };

const char* to_string(ChannelModelKind kind);

struct ScenarioConfig {
    ArrayGeometry geometry;
    std::vector<TerminalTrajectory> terminals;
    std::size_t num_blocks = 1;
    std::size_t num_snapshots = 2;
    double sample_period = 0.005;      // seconds between snapshots
    double carrier_wavelength = 0.081; // meters
    ChannelModelKind model = ChannelModelKind::LosGeometric;
    double doppler_hz = 0.0;           // jakes only
    std::uint64_t rng_seed = 1;
    double block_bandwidth_hz = 300e3; // carrier offset between frequency blocks
    std::size_t num_sinusoids = 64;    // jakes sum-of-sinusoids order
    bool nyquist_check = true;
    double max_speed = 8.06;           // m/s, sampling limit when nyquist_check is on

    std::size_t num_streams() const;

    /// Throws ConfigError naming the offending field.
    void validate() const;

    static ScenarioConfig from_json_text(const std::string& text);
    static ScenarioConfig from_json_file(const std::string& path);
    std::string to_json_text(int indent = 2) const;
};

} // namespace mmkit
