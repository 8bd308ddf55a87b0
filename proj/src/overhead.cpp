// SPDX-License-Identifier: Apache-2.0

#include "mmkit/overhead.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "mmkit/errors.hpp"

namespace mmkit {

void OverheadModel::validate() const {
    if (!(subcarrier_bandwidth_hz > 0.0)) {
        throw ConfigError("overhead: 'subcarrier_bandwidth_hz' must be positive");
    }
    if (!(coherence_bandwidth_hz >= subcarrier_bandwidth_hz)) {
        throw ConfigError("overhead: 'coherence_bandwidth_hz' must be at least one subcarrier");
    }
    if (!(symbol_duration > 0.0)) {
        throw ConfigError("overhead: 'symbol_duration' must be positive");
    }
    if (system_subcarriers < 1) {
        throw ConfigError("overhead: 'system_subcarriers' must be at least 1");
    }
    if (users_to_train < 1) {
        throw ConfigError("overhead: 'users_to_train' must be at least 1");
    }
    if (!(tc_reference > 0.0)) {
        throw ConfigError("overhead: 'tc_reference' must be positive");
    }
    if (!(v_reference > 0.0)) {
        throw ConfigError("overhead: 'v_reference' must be positive");
    }
}

std::size_t n_smooth(const OverheadModel& model) {
    model.validate();
    return static_cast<std::size_t>(
        std::floor(model.coherence_bandwidth_hz / model.subcarrier_bandwidth_hz));
}

double coherence_time_at_velocity(const OverheadModel& model, double velocity) {
    model.validate();
    if (!(velocity > 0.0)) {
        throw DimensionError("overhead: velocity must be positive");
    }
    return model.tc_reference * model.v_reference / velocity;
}

std::size_t n_slot(const OverheadModel& model, double coherence_time) {
    model.validate();
    if (!(coherence_time > 0.0)) {
        throw DimensionError("overhead: coherence time must be positive");
    }
    return static_cast<std::size_t>(std::floor(coherence_time / model.symbol_duration));
}

std::size_t n_train(std::size_t users, std::size_t n_smooth) {
    if (users < 1 || n_smooth < 1) {
        throw DimensionError("overhead: users and n_smooth must be at least 1");
    }
    return (users + n_smooth - 1) / n_smooth;
}

OverheadPoint make_point(const OverheadModel& model, double velocity, double coherence_time,
                         std::size_t m_azimuth) {
    OverheadPoint point;
    point.m_azimuth = m_azimuth;
    point.velocity = velocity;
    point.coherence_time = coherence_time;
    point.n_smooth = n_smooth(model);
    point.n_slot = n_slot(model, coherence_time);
    point.tau_c = point.n_slot * point.n_smooth;
    point.n_train = n_train(model.users_to_train, point.n_smooth);
    if (point.tau_c < model.users_to_train) {
        std::ostringstream msg;
        msg << "overhead: cannot train " << model.users_to_train << " users at " << velocity
            << " m/s (coherence interval holds " << point.tau_c << " resources)";
        throw InfeasibleTraining(msg.str(), velocity);
    }
    point.overhead_percent =
        100.0 * static_cast<double>(point.n_train) / static_cast<double>(point.n_slot);
    return point;
}

std::vector<OverheadPoint>
overhead_curve(const OverheadModel& model, const std::vector<double>& velocities,
               const std::vector<std::size_t>& azimuth_sizes,
               const std::optional<std::vector<std::pair<std::size_t, double>>>& d10_table,
               double wavelength, std::optional<double> fixed_coherence_time) {
    model.validate();
    if (velocities.empty()) {
        throw DimensionError("overhead: no velocities given");
    }
    if (azimuth_sizes.empty()) {
        throw DimensionError("overhead: no azimuth sizes given");
    }
    if (!(wavelength > 0.0)) {
        throw DimensionError("overhead: wavelength must be positive");
    }

    std::vector<OverheadPoint> points;
    points.reserve(velocities.size() * azimuth_sizes.size());
    for (std::size_t size : azimuth_sizes) {
        // Distance the terminal can travel before the channel decorrelates.
        double coherence_distance = model.tc_reference * model.v_reference;
        if (d10_table) {
            bool found = false;
            for (const auto& [table_size, distance_wl] : *d10_table) {
                if (table_size == size) {
                    coherence_distance = distance_wl * wavelength;
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw DimensionError("overhead: azimuth size " + std::to_string(size)
                                     + " missing from the d10 table");
            }
        }
        for (double v : velocities) {
            if (!(v > 0.0)) {
                throw DimensionError("overhead: velocity must be positive");
            }
            const double tc = fixed_coherence_time ? *fixed_coherence_time : coherence_distance / v;
            points.push_back(make_point(model, v, tc, size));
        }
    }
    return points;
}

} // namespace mmkit
