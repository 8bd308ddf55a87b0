// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace mmkit {

/// Training-budget parameters of an LTE-like uplink frame. The coherence
/// anchor (tc_reference at v_reference) scales inversely with speed: the
/// channel stays coherent over a fixed travelled distance.
struct OverheadModel {
    double coherence_bandwidth_hz = 300e3;
    double subcarrier_bandwidth_hz = 15e3;
    double symbol_duration = 71.4e-6; // seconds
    std::size_t system_subcarriers = 1200;
    std::size_t users_to_train = 50;
    double tc_reference = 0.125;        // seconds
    double v_reference = 29.0 / 3.6;    // m/s (29 km/h)

    void validate() const;
};

struct OverheadPoint {
    std::size_t m_azimuth = 0; // 0 when no sub-array applies
    double velocity = 0.0;     // m/s
    double coherence_time = 0.0;
    std::size_t n_smooth = 0;
    std::size_t n_slot = 0;
    std::size_t tau_c = 0;
    std::size_t n_train = 0;
    double overhead_percent = 0.0;
};

/// Subcarriers per coherence bandwidth: floor(Bc / Bs).
std::size_t n_smooth(const OverheadModel& model);

/// Coherence time at a velocity, scaled from the anchor.
double coherence_time_at_velocity(const OverheadModel& model, double velocity);

/// Whole symbols per coherence time: floor(Tc / Ts).
std::size_t n_slot(const OverheadModel& model, double coherence_time);

/// Pilot symbols needed: ceil(users / n_smooth).
std::size_t n_train(std::size_t users, std::size_t n_smooth);

/// Full budget for one (velocity, coherence time) pair. Throws
/// InfeasibleTraining naming the velocity when the coherence interval
/// tau_c has fewer resources than users to train.
OverheadPoint make_point(const OverheadModel& model, double velocity, double coherence_time,
                         std::size_t m_azimuth = 0);

/// Overhead over a velocity sweep, one row per (azimuth size, velocity).
/// The coherence distance per size comes from the d10 table (size ->
/// distance in wavelengths) when given, otherwise from the model anchor.
/// fixed_coherence_time overrides the per-velocity scaling entirely.
std::vector<OverheadPoint>
overhead_curve(const OverheadModel& model, const std::vector<double>& velocities,
               const std::vector<std::size_t>& azimuth_sizes,
               const std::optional<std::vector<std::pair<std::size_t, double>>>& d10_table,
               double wavelength, std::optional<double> fixed_coherence_time = std::nullopt);

} // namespace mmkit
