// SPDX-License-Identifier: Apache-2.0

#include "mmkit/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "mmkit/errors.hpp"

namespace mmkit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw ConfigError("config: " + msg);
}

void check_known_fields(const json& obj, const char* scope, const std::set<std::string>& known) {
    for (const auto& item : obj.items()) {
        if (known.find(item.key()) == known.end()) {
            fail(std::string(scope) + ": unknown field '" + item.key() + "'");
        }
    }
}

const json& require_field(const json& obj, const char* scope, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(std::string(scope) + ": missing field '" + key + "'");
    }
    return *it;
}

double as_number(const json& v, const std::string& name) {
    if (!v.is_number()) {
        fail("field '" + name + "' must be a number");
    }
    return v.get<double>();
}

std::size_t as_count(const json& v, const std::string& name) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail("field '" + name + "' must be a non-negative integer");
    }
    return static_cast<std::size_t>(v.get<unsigned long long>());
}

bool as_bool(const json& v, const std::string& name) {
    if (!v.is_boolean()) {
        fail("field '" + name + "' must be a boolean");
    }
    return v.get<bool>();
}

Vec3 as_vec3(const json& v, const std::string& name) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number()
        || !v[2].is_number()) {
        fail("field '" + name + "' must be an array of 3 numbers");
    }
    return Vec3{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

ChannelModelKind parse_model(const json& v) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "los-geometric") {
            return ChannelModelKind::LosGeometric;
        }
        if (s == "jakes") {
            return ChannelModelKind::Jakes;
        }
    }
    fail("field 'model' must be \"los-geometric\" or \"jakes\"");
}

} // namespace

const char* to_string(ChannelModelKind kind) {
    return kind == ChannelModelKind::LosGeometric ? "los-geometric" : "jakes";
}

std::size_t ScenarioConfig::num_streams() const {
    std::size_t k = 0;
    for (const auto& t : terminals) {
        k += t.num_antennas;
    }
    return k;
}

void ScenarioConfig::validate() const {
    if (geometry.rows_elevation < 1) {
        fail("field 'geometry.rows_elevation' must be at least 1");
    }
    if (geometry.cols_azimuth < 1) {
        fail("field 'geometry.cols_azimuth' must be at least 1");
    }
    if (!(geometry.element_spacing > 0.0)) {
        fail("field 'geometry.element_spacing' must be positive");
    }
    if (terminals.empty()) {
        fail("field 'terminals' must list at least one terminal");
    }
    for (std::size_t i = 0; i < terminals.size(); ++i) {
        const auto& t = terminals[i];
        if (t.num_antennas < 1 || t.num_antennas > 2) {
            fail("terminal " + std::to_string(i) + ": 'num_antennas' must be 1 or 2");
        }
        if (nyquist_check && norm(t.velocity) > max_speed) {
            std::ostringstream msg;
            msg << "terminal " << i << ": speed " << norm(t.velocity)
                << " m/s exceeds sampling limit of " << max_speed << " m/s";
            fail(msg.str());
        }
    }
    if (num_streams() > geometry.size()) {
        fail("total streams K=" + std::to_string(num_streams()) + " exceeds antennas M="
             + std::to_string(geometry.size()));
    }
    if (num_blocks < 1) {
        fail("field 'num_blocks' must be at least 1");
    }
    if (num_snapshots < 2) {
        fail("field 'num_snapshots' must be at least 2");
    }
    if (!(sample_period > 0.0) || std::llround(sample_period * 1e6) < 1) {
        fail("field 'sample_period' must be at least 1 microsecond");
    }
    if (!(carrier_wavelength > 0.0)) {
        fail("field 'carrier_wavelength' must be positive");
    }
    if (model == ChannelModelKind::Jakes) {
        if (!(doppler_hz > 0.0)) {
            fail("field 'doppler_hz' must be positive for the jakes model");
        }
        if (num_sinusoids < 1) {
            fail("field 'num_sinusoids' must be at least 1");
        }
    }
    if (block_bandwidth_hz < 0.0) {
        fail("field 'block_bandwidth_hz' must be non-negative");
    }
    if (!(max_speed > 0.0)) {
        fail("field 'max_speed' must be positive");
    }
}

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(e.what());
    }
    if (!j.is_object()) {
        fail("top-level document must be an object");
    }
    check_known_fields(j, "top-level",
                       {"geometry", "terminals", "num_blocks", "num_snapshots", "sample_period",
                        "carrier_wavelength", "model", "doppler_hz", "rng_seed",
                        "block_bandwidth_hz", "num_sinusoids", "nyquist_check", "max_speed"});

    ScenarioConfig cfg;

    const json& geo = require_field(j, "top-level", "geometry");
    if (!geo.is_object()) {
        fail("field 'geometry' must be an object");
    }
    check_known_fields(geo, "geometry", {"rows_elevation", "cols_azimuth", "element_spacing"});
    cfg.geometry.rows_elevation = as_count(require_field(geo, "geometry", "rows_elevation"),
                                           "geometry.rows_elevation");
    cfg.geometry.cols_azimuth = as_count(require_field(geo, "geometry", "cols_azimuth"),
                                         "geometry.cols_azimuth");
    if (geo.contains("element_spacing")) {
        cfg.geometry.element_spacing = as_number(geo["element_spacing"], "geometry.element_spacing");
    }

    const json& terms = require_field(j, "top-level", "terminals");
    if (!terms.is_array() || terms.empty()) {
        fail("field 'terminals' must be a non-empty array");
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const json& t = terms[i];
        const std::string scope = "terminal " + std::to_string(i);
        if (!t.is_object()) {
            fail(scope + " must be an object");
        }
        check_known_fields(t, scope.c_str(), {"initial_position", "velocity", "num_antennas"});
        TerminalTrajectory traj;
        traj.initial_position = as_vec3(require_field(t, scope.c_str(), "initial_position"),
                                        scope + ".initial_position");
        if (t.contains("velocity")) {
            traj.velocity = as_vec3(t["velocity"], scope + ".velocity");
        }
        if (t.contains("num_antennas")) {
            traj.num_antennas = as_count(t["num_antennas"], scope + ".num_antennas");
        }
        cfg.terminals.push_back(traj);
    }

    cfg.model = parse_model(require_field(j, "top-level", "model"));
    cfg.num_snapshots = as_count(require_field(j, "top-level", "num_snapshots"), "num_snapshots");
    if (j.contains("num_blocks")) {
        cfg.num_blocks = as_count(j["num_blocks"], "num_blocks");
    }
    if (j.contains("sample_period")) {
        cfg.sample_period = as_number(j["sample_period"], "sample_period");
    }
    if (j.contains("carrier_wavelength")) {
        cfg.carrier_wavelength = as_number(j["carrier_wavelength"], "carrier_wavelength");
    }
    if (j.contains("doppler_hz")) {
        cfg.doppler_hz = as_number(j["doppler_hz"], "doppler_hz");
    }
    if (j.contains("rng_seed")) {
        if (!j["rng_seed"].is_number_integer()) {
            fail("field 'rng_seed' must be an integer");
        }
        cfg.rng_seed = j["rng_seed"].get<std::uint64_t>();
    }
    if (j.contains("block_bandwidth_hz")) {
        cfg.block_bandwidth_hz = as_number(j["block_bandwidth_hz"], "block_bandwidth_hz");
    }
    if (j.contains("num_sinusoids")) {
        cfg.num_sinusoids = as_count(j["num_sinusoids"], "num_sinusoids");
    }
    if (j.contains("nyquist_check")) {
        cfg.nyquist_check = as_bool(j["nyquist_check"], "nyquist_check");
    }
    if (j.contains("max_speed")) {
        cfg.max_speed = as_number(j["max_speed"], "max_speed");
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig ScenarioConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read config file: " + path);
    }
    return from_json_text(buf.str());
}

std::string ScenarioConfig::to_json_text(int indent) const {
    json j;
    j["geometry"] = {{"rows_elevation", geometry.rows_elevation},
                     {"cols_azimuth", geometry.cols_azimuth},
                     {"element_spacing", geometry.element_spacing}};
    j["terminals"] = json::array();
    for (const auto& t : terminals) {
        j["terminals"].push_back(
            {{"initial_position", {t.initial_position.x, t.initial_position.y, t.initial_position.z}},
             {"velocity", {t.velocity.x, t.velocity.y, t.velocity.z}},
             {"num_antennas", t.num_antennas}});
    }
    j["num_blocks"] = num_blocks;
    j["num_snapshots"] = num_snapshots;
    j["sample_period"] = sample_period;
    j["carrier_wavelength"] = carrier_wavelength;
    j["model"] = to_string(model);
    if (model == ChannelModelKind::Jakes) {
        j["doppler_hz"] = doppler_hz;
        j["num_sinusoids"] = num_sinusoids;
    }
    j["rng_seed"] = rng_seed;
    j["block_bandwidth_hz"] = block_bandwidth_hz;
    j["nyquist_check"] = nyquist_check;
    j["max_speed"] = max_speed;
    return j.dump(indent);
}

} // namespace mmkit
