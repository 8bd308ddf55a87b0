// SPDX-License-Identifier: Apache-2.0

#include "mmkit/cli_app.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mmkit/aging.hpp"
#include "mmkit/channel_models.hpp"
#include "mmkit/channel_trace.hpp"
#include "mmkit/csv.hpp"
#include "mmkit/detection.hpp"
#include "mmkit/errors.hpp"
#include "mmkit/overhead.hpp"
#include "mmkit/scenario.hpp"
#include "mmkit/svg.hpp"
#include "mmkit/trace_io.hpp"

namespace mmkit {

const char* const kToolVersion = "0.1.0";

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& flag) {
    std::vector<T> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string field = text.substr(pos, comma - pos);
        T value{};
        const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
        if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
            throw ConfigError(flag + ": cannot parse '" + field + "'");
        }
        values.push_back(value);
        pos = comma + 1;
    }
    if (values.empty()) {
        throw ConfigError(flag + ": empty list");
    }
    return values;
}

/// One manifest is written beside every artifact the invocation produced.
void write_manifests(const std::string& subcommand, const json& parameters,
                     const std::vector<std::string>& inputs,
                     const std::vector<std::string>& outputs,
                     std::optional<std::uint64_t> rng_seed, double duration_seconds) {
    json manifest;
    manifest["tool"] = "mmkit";
    manifest["version"] = kToolVersion;
    manifest["subcommand"] = subcommand;
    manifest["parameters"] = parameters;
    manifest["inputs"] = inputs;
    manifest["outputs"] = outputs;
    if (rng_seed) {
        manifest["rng_seed"] = *rng_seed;
    }
    manifest["duration_seconds"] = duration_seconds;
    const std::string text = manifest.dump(2) + "\n";
    for (const std::string& artifact : outputs) {
        write_text_file(artifact + ".manifest.json", text);
    }
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
    std::string config;
    std::string out;
    bool raw = false;
    unsigned threads = 1;
};

void cmd_generate(const GenerateOpts& opt) {
    const auto start = Clock::now();
    const ScenarioConfig cfg = ScenarioConfig::from_json_file(opt.config);
    ChannelTrace trace = generate(cfg, opt.threads);
    if (!opt.raw) {
        trace = normalize(trace);
    }
    write_trace_file(trace, opt.out);

    json params;
    params["config"] = opt.config;
    params["out"] = opt.out;
    params["raw"] = opt.raw;
    params["threads"] = opt.threads;
    params["scenario"] = json::parse(cfg.to_json_text());
    write_manifests("generate", params, {opt.config}, {opt.out}, cfg.rng_seed,
                    seconds_since(start));
}

// ----------------------------------------------------------------- sumrate

struct SumrateOpts {
    std::string trace;
    std::string decoder = "zf";
    double snr_db = 30.0;
    std::size_t delta_samples = 0;
    bool exact_delta = false;
    std::string out;
    std::string summary_out;
    std::string cdf_out;
    unsigned threads = 1;
};

std::string series_csv(const RateSeries& series, std::size_t users) {
    std::string csv = "t,b,sum_rate";
    for (std::size_t u = 0; u < users; ++u) {
        csv += ",sinr_user_" + std::to_string(u);
    }
    csv += "\n";
    for (const RatePoint& p : series.points) {
        csv += std::to_string(p.time_index);
        csv += ",";
        csv += std::to_string(p.block_index);
        csv += ",";
        csv += format_double(p.sum_rate);
        for (double sinr : p.per_user_sinr) {
            csv += ",";
            csv += format_double(sinr);
        }
        csv += "\n";
    }
    return csv;
}

void cmd_sumrate(const SumrateOpts& opt) {
    const auto start = Clock::now();
    const ChannelTrace trace = read_trace_file(opt.trace);
    const DecoderKind kind = *decoder_from_string(opt.decoder);
    const RateSeries series =
        evaluate_series(trace, kind, opt.snr_db, opt.delta_samples, opt.exact_delta, opt.threads);
    write_text_file(opt.out, series_csv(series, trace.num_streams));

    const RateSummary summary = summarize(series);
    const std::string summary_path =
        opt.summary_out.empty() ? opt.out + ".summary.csv" : opt.summary_out;
    std::string summary_csv = "key,value\n";
    summary_csv += "median_sum_rate," + format_double(summary.median_sum_rate) + "\n";
    summary_csv += "median_per_user_rate," + format_double(summary.median_per_user_rate) + "\n";
    summary_csv += "mean_sinr_db," + format_double(summary.mean_sinr_db) + "\n";
    write_text_file(summary_path, summary_csv);

    std::vector<std::string> outputs{opt.out, summary_path};
    if (!opt.cdf_out.empty()) {
        std::string cdf_csv = "sum_rate,probability\n";
        for (const auto& [rate, prob] : summary.cdf) {
            cdf_csv += format_double(rate) + "," + format_double(prob) + "\n";
        }
        write_text_file(opt.cdf_out, cdf_csv);
        outputs.push_back(opt.cdf_out);
    }

    json params;
    params["trace"] = opt.trace;
    params["decoder"] = opt.decoder;
    params["snr_db"] = opt.snr_db;
    params["delta_samples"] = opt.delta_samples;
    params["exact_delta"] = opt.exact_delta;
    params["effective_delta_samples"] = series.delta_samples;
    params["threads"] = opt.threads;
    write_manifests("sumrate", params, {opt.trace}, outputs, std::nullopt, seconds_since(start));
}

// ------------------------------------------------------------------- aging

struct AgingOpts {
    std::string trace;
    std::string decoder = "both";
    double snr_db = 30.0;
    std::size_t max_delta = 4;
    std::string out;
    unsigned threads = 1;
};

void cmd_aging(const AgingOpts& opt) {
    const auto start = Clock::now();
    if (opt.max_delta < 1) {
        throw ConfigError("aging: --max-delta must be at least 1");
    }
    const ChannelTrace trace = read_trace_file(opt.trace);
    std::vector<std::size_t> deltas(opt.max_delta);
    for (std::size_t i = 0; i < opt.max_delta; ++i) {
        deltas[i] = i + 1;
    }

    std::vector<DecoderKind> kinds;
    if (opt.decoder == "both") {
        kinds = {DecoderKind::Zf, DecoderKind::Mf};
    } else {
        kinds = {*decoder_from_string(opt.decoder)};
    }
    std::vector<ExpectedRateCurve> curves;
    for (DecoderKind kind : kinds) {
        curves.push_back(expected_rate(trace, kind, opt.snr_db, deltas, opt.threads));
    }

    std::string csv = "delta_ms";
    for (const auto& curve : curves) {
        csv += std::string(",gamma_") + to_string(curve.decoder);
    }
    csv += "\n";
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        csv += format_double(curves.front().deltas[i] * 1e3);
        for (const auto& curve : curves) {
            csv += "," + format_double(curve.gamma[i]);
        }
        csv += "\n";
    }
    write_text_file(opt.out, csv);

    json params;
    params["trace"] = opt.trace;
    params["decoder"] = opt.decoder;
    params["snr_db"] = opt.snr_db;
    params["max_delta"] = opt.max_delta;
    params["threads"] = opt.threads;
    write_manifests("aging", params, {opt.trace}, {opt.out}, std::nullopt, seconds_since(start));
}

// --------------------------------------------------------------- coherence

struct CoherenceOpts {
    std::string trace;
    double threshold = 0.9;
    std::size_t max_lag = 0; // 0 means full trace length
    std::string out;
    std::string summary_out;
    unsigned threads = 1;
};

void cmd_coherence(const CoherenceOpts& opt) {
    const auto start = Clock::now();
    const ChannelTrace trace = read_trace_file(opt.trace);
    const std::size_t max_lag =
        opt.max_lag == 0 ? trace.num_snapshots - 1 : std::min(opt.max_lag, trace.num_snapshots - 1);
    const CorrelationProfile profile = temporal_correlation(trace, max_lag, opt.threads);
    const CoherenceTime result = coherence_time(profile, opt.threshold);

    std::string csv = "lag_ms,correlation\n";
    for (std::size_t i = 0; i < profile.lags.size(); ++i) {
        csv += format_double(profile.lags[i] * 1e3) + "," + format_double(profile.values[i]) + "\n";
    }
    write_text_file(opt.out, csv);

    const std::string summary_path =
        opt.summary_out.empty() ? opt.out + ".summary.csv" : opt.summary_out;
    std::string summary = "key,value\n";
    summary += "threshold," + format_double(opt.threshold) + "\n";
    summary += "coherence_time_ms," + format_double(result.seconds * 1e3) + "\n";
    summary += std::string("no_crossing,") + (result.crossed ? "false" : "true") + "\n";
    write_text_file(summary_path, summary);

    json params;
    params["trace"] = opt.trace;
    params["threshold"] = opt.threshold;
    params["max_lag"] = max_lag;
    params["threads"] = opt.threads;
    write_manifests("coherence", params, {opt.trace}, {opt.out, summary_path}, std::nullopt,
                    seconds_since(start));
}

// --------------------------------------------------------------------- d10

struct D10Opts {
    std::string trace;
    std::string sizes;
    double speed = 0.0;
    std::size_t elevation_rows = 1;
    std::size_t max_lag = 400;
    double snr_db = 30.0;
    std::string decoder = "zf";
    std::string out;
    unsigned threads = 1;
};

void cmd_d10(const D10Opts& opt) {
    const auto start = Clock::now();
    ChannelTrace trace = read_trace_file(opt.trace);
    if (opt.elevation_rows == 0 || trace.num_antennas % opt.elevation_rows != 0) {
        throw ConfigError("d10: --elevation-rows " + std::to_string(opt.elevation_rows)
                          + " does not divide M=" + std::to_string(trace.num_antennas));
    }
    trace.geometry =
        ArrayGeometry{opt.elevation_rows, trace.num_antennas / opt.elevation_rows, 0.5};

    const std::vector<std::size_t> sizes = parse_list<std::size_t>(opt.sizes, "--sizes");
    const DecoderKind kind = *decoder_from_string(opt.decoder);
    const std::vector<D10Point> points =
        d10_vs_azimuth(trace, sizes, opt.speed, opt.max_lag, opt.threads);

    std::string csv = "m_azimuth,d10_wavelengths,median_rate\n";
    for (const D10Point& p : points) {
        // Achievable-rate companion figure: median sum rate of the same
        // sub-array, renormalized, with the freshest usable decoder.
        const ChannelTrace sub = normalize(azimuth_subarray(trace, p.m_azimuth));
        const RateSeries series = evaluate_series(sub, kind, opt.snr_db, 1, false, opt.threads);
        const double median_rate = summarize(series).median_sum_rate;
        csv += std::to_string(p.m_azimuth) + "," + format_double(p.distance_wavelengths) + ","
               + format_double(median_rate) + "\n";
    }
    write_text_file(opt.out, csv);

    json params;
    params["trace"] = opt.trace;
    params["sizes"] = opt.sizes;
    params["speed"] = opt.speed;
    params["elevation_rows"] = opt.elevation_rows;
    params["max_lag"] = opt.max_lag;
    params["snr_db"] = opt.snr_db;
    params["decoder"] = opt.decoder;
    params["threads"] = opt.threads;
    write_manifests("d10", params, {opt.trace}, {opt.out}, std::nullopt, seconds_since(start));
}

// ---------------------------------------------------------------- overhead

struct OverheadOpts {
    double bc_hz = 300e3;
    double bs_hz = 15e3;
    double ts_us = 71.4;
    std::size_t subcarriers = 1200;
    std::size_t users = 50;
    double tc_ref_ms = 125.0;
    double v_ref_mps = 29.0 / 3.6;
    std::string velocities = "10,20,30,40,50,60,70,80,90,100";
    std::string sizes = "25";
    std::string d10_table;
    double wavelength = 0.081;
    double tc_ms = 0.0; // fixed coherence time override, 0 disables
    std::string out;
};

void cmd_overhead(const OverheadOpts& opt) {
    const auto start = Clock::now();
    OverheadModel model;
    model.coherence_bandwidth_hz = opt.bc_hz;
    model.subcarrier_bandwidth_hz = opt.bs_hz;
    model.symbol_duration = opt.ts_us * 1e-6;
    model.system_subcarriers = opt.subcarriers;
    model.users_to_train = opt.users;
    model.tc_reference = opt.tc_ref_ms * 1e-3;
    model.v_reference = opt.v_ref_mps;

    const std::vector<double> velocities = parse_list<double>(opt.velocities, "--velocities");
    const std::vector<std::size_t> sizes = parse_list<std::size_t>(opt.sizes, "--sizes");

    std::optional<std::vector<std::pair<std::size_t, double>>> table;
    std::vector<std::string> inputs;
    if (!opt.d10_table.empty()) {
        const CsvTable csv = read_csv_file(opt.d10_table);
        const auto size_col = csv.column("m_azimuth");
        const auto dist_col = csv.column("d10_wavelengths");
        if (!size_col || !dist_col) {
            throw ConfigError("overhead: d10 table needs 'm_azimuth' and 'd10_wavelengths' columns");
        }
        table.emplace();
        for (const auto& row : csv.rows) {
            table->emplace_back(static_cast<std::size_t>(row[*size_col]), row[*dist_col]);
        }
        inputs.push_back(opt.d10_table);
    }
    const std::optional<double> fixed_tc =
        opt.tc_ms > 0.0 ? std::optional<double>(opt.tc_ms * 1e-3) : std::nullopt;

    const std::vector<OverheadPoint> points =
        overhead_curve(model, velocities, sizes, table, opt.wavelength, fixed_tc);

    std::string csv = "m_azimuth,velocity_mps,tc_ms,n_smooth,n_slot,tau_c,n_train,"
                      "overhead_percent\n";
    for (const OverheadPoint& p : points) {
        csv += std::to_string(p.m_azimuth) + "," + format_double(p.velocity) + ","
               + format_double(p.coherence_time * 1e3) + "," + std::to_string(p.n_smooth) + ","
               + std::to_string(p.n_slot) + "," + std::to_string(p.tau_c) + ","
               + std::to_string(p.n_train) + "," + format_double(p.overhead_percent) + "\n";
    }
    write_text_file(opt.out, csv);

    json params;
    params["bc_hz"] = opt.bc_hz;
    params["bs_hz"] = opt.bs_hz;
    params["ts_us"] = opt.ts_us;
    params["subcarriers"] = opt.subcarriers;
    params["users"] = opt.users;
    params["tc_ref_ms"] = opt.tc_ref_ms;
    params["v_ref_mps"] = opt.v_ref_mps;
    params["velocities"] = opt.velocities;
    params["sizes"] = opt.sizes;
    params["d10_table"] = opt.d10_table;
    params["wavelength"] = opt.wavelength;
    params["tc_ms"] = opt.tc_ms;
    write_manifests("overhead", params, inputs, {opt.out}, std::nullopt, seconds_since(start));
}

// -------------------------------------------------------------------- plot

struct PlotOpts {
    std::string csv;
    std::string x;
    std::string y;
    std::string out;
    bool cdf = false;
    std::string title;
    int width = 800;
    int height = 500;
};

void cmd_plot(const PlotOpts& opt) {
    const auto start = Clock::now();
    const CsvTable table = read_csv_file(opt.csv);
    if (table.rows.size() < 2) {
        throw ConfigError("plot: need at least 2 data rows");
    }

    std::vector<std::string> y_names;
    for (std::size_t pos = 0; pos <= opt.y.size();) {
        std::size_t comma = opt.y.find(',', pos);
        if (comma == std::string::npos) {
            comma = opt.y.size();
        }
        y_names.push_back(opt.y.substr(pos, comma - pos));
        pos = comma + 1;
    }

    std::vector<SvgSeries> series;
    SvgChartOptions chart;
    chart.width = opt.width;
    chart.height = opt.height;
    chart.title = opt.title;

    if (opt.cdf) {
        for (const std::string& name : y_names) {
            const auto col = table.column(name);
            if (!col) {
                throw ConfigError("plot: unknown column '" + name + "'");
            }
            std::vector<double> values;
            values.reserve(table.rows.size());
            for (const auto& row : table.rows) {
                values.push_back(row[*col]);
            }
            std::sort(values.begin(), values.end());
            SvgSeries s;
            s.label = name;
            const double n = static_cast<double>(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
                s.points.emplace_back(values[i], static_cast<double>(i + 1) / n);
            }
            series.push_back(std::move(s));
        }
        chart.x_label = y_names.size() == 1 ? y_names.front() : "value";
        chart.y_label = "cumulative probability";
    } else {
        if (opt.x.empty()) {
            throw ConfigError("plot: --x is required unless --cdf is set");
        }
        const auto x_col = table.column(opt.x);
        if (!x_col) {
            throw ConfigError("plot: unknown column '" + opt.x + "'");
        }
        for (const std::string& name : y_names) {
            const auto col = table.column(name);
            if (!col) {
                throw ConfigError("plot: unknown column '" + name + "'");
            }
            SvgSeries s;
            s.label = name;
            for (const auto& row : table.rows) {
                s.points.emplace_back(row[*x_col], row[*col]);
            }
            series.push_back(std::move(s));
        }
        chart.x_label = opt.x;
        chart.y_label = y_names.size() == 1 ? y_names.front() : "";
    }

    write_text_file(opt.out, render_line_chart(series, chart));

    json params;
    params["csv"] = opt.csv;
    params["x"] = opt.x;
    params["y"] = opt.y;
    params["cdf"] = opt.cdf;
    params["title"] = opt.title;
    params["width"] = opt.width;
    params["height"] = opt.height;
    write_manifests("plot", params, {opt.csv}, {opt.out}, std::nullopt, seconds_since(start));
}

} // namespace

int run_app(int argc, const char* const* argv) {
    CLI::App app{"Massive MIMO uplink toolkit: synthetic channel traces, ZF/MF sum rates "
                 "under decoder aging, coherence metrics and training overhead."};
    app.name("mmkit");
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* gen_cmd = app.add_subcommand("generate", "Generate a channel trace from a JSON "
                                                       "scenario config");
    gen_cmd->add_option("--config", gen.config, "Scenario config JSON path")->required();
    gen_cmd->add_option("--out", gen.out, "Output trace path")->required();
    gen_cmd->add_flag("--raw", gen.raw, "Skip per-stream power normalization");
    gen_cmd->add_option("--threads", gen.threads, "Worker threads (0 = all cores)");

    SumrateOpts sum;
    CLI::App* sum_cmd = app.add_subcommand("sumrate", "Sum rate and per-user SINR over a trace");
    sum_cmd->add_option("--trace", sum.trace, "Input trace path")->required();
    sum_cmd->add_option("--decoder", sum.decoder, "Decoder")
        ->check(CLI::IsMember({"zf", "mf"}))
        ->required();
    sum_cmd->add_option("--snr-db", sum.snr_db, "Average SNR in dB (default 30)");
    sum_cmd->add_option("--delta-samples", sum.delta_samples, "Decoder age in samples (default 0)");
    sum_cmd->add_flag("--exact-delta", sum.exact_delta,
                      "Apply the delay literally; 0 then reuses the same snapshot");
    sum_cmd->add_option("--out", sum.out, "Output CSV path")->required();
    sum_cmd->add_option("--summary-out", sum.summary_out,
                        "Summary CSV path (default: <out>.summary.csv)");
    sum_cmd->add_option("--cdf-out", sum.cdf_out, "Optional sum-rate CDF CSV path");
    sum_cmd->add_option("--threads", sum.threads, "Worker threads (0 = all cores)");

    AgingOpts aging;
    CLI::App* aging_cmd = app.add_subcommand("aging", "Expected rate ratio vs decoder age");
    aging_cmd->add_option("--trace", aging.trace, "Input trace path")->required();
    aging_cmd->add_option("--decoder", aging.decoder, "Decoder(s) to evaluate")
        ->check(CLI::IsMember({"zf", "mf", "both"}));
    aging_cmd->add_option("--snr-db", aging.snr_db, "Average SNR in dB (default 30)");
    aging_cmd->add_option("--max-delta", aging.max_delta,
                          "Largest decoder age in samples (default 4)");
    aging_cmd->add_option("--out", aging.out, "Output CSV path")->required();
    aging_cmd->add_option("--threads", aging.threads, "Worker threads (0 = all cores)");

    CoherenceOpts coh;
    CLI::App* coh_cmd = app.add_subcommand("coherence", "Temporal correlation profile and "
                                                        "coherence time");
    coh_cmd->add_option("--trace", coh.trace, "Input trace path")->required();
    coh_cmd->add_option("--threshold", coh.threshold, "Correlation threshold (default 0.9)");
    coh_cmd->add_option("--max-lag", coh.max_lag, "Largest lag in samples (default: T-1)");
    coh_cmd->add_option("--out", coh.out, "Profile CSV path")->required();
    coh_cmd->add_option("--summary-out", coh.summary_out,
                        "Summary CSV path (default: <out>.summary.csv)");
    coh_cmd->add_option("--threads", coh.threads, "Worker threads (0 = all cores)");

    D10Opts d10;
    CLI::App* d10_cmd = app.add_subcommand("d10", "Decorrelation distance and median rate vs "
                                                  "azimuth aperture");
    d10_cmd->add_option("--trace", d10.trace, "Input trace path")->required();
    d10_cmd->add_option("--sizes", d10.sizes, "Comma-separated azimuth sub-array sizes")
        ->required();
    d10_cmd->add_option("--speed", d10.speed, "Terminal speed in m/s")->required();
    d10_cmd->add_option("--elevation-rows", d10.elevation_rows,
                        "Elevation rows of the stored array (default 1)");
    d10_cmd->add_option("--max-lag", d10.max_lag, "Largest lag in samples (default 400)");
    d10_cmd->add_option("--snr-db", d10.snr_db, "SNR for the rate column (default 30)");
    d10_cmd->add_option("--decoder", d10.decoder, "Decoder for the rate column")
        ->check(CLI::IsMember({"zf", "mf"}));
    d10_cmd->add_option("--out", d10.out, "Output CSV path")->required();
    d10_cmd->add_option("--threads", d10.threads, "Worker threads (0 = all cores)");

    OverheadOpts ovh;
    CLI::App* ovh_cmd = app.add_subcommand("overhead", "Training overhead vs velocity");
    ovh_cmd->add_option("--bc-hz", ovh.bc_hz, "Coherence bandwidth in Hz (default 300000)");
    ovh_cmd->add_option("--bs-hz", ovh.bs_hz, "Subcarrier bandwidth in Hz (default 15000)");
    ovh_cmd->add_option("--ts-us", ovh.ts_us, "Symbol duration in microseconds (default 71.4)");
    ovh_cmd->add_option("--subcarriers", ovh.subcarriers, "System subcarriers (default 1200)");
    ovh_cmd->add_option("--users", ovh.users, "Users to train (default 50)");
    ovh_cmd->add_option("--tc-ref-ms", ovh.tc_ref_ms,
                        "Anchor coherence time in ms (default 125)");
    ovh_cmd->add_option("--v-ref-mps", ovh.v_ref_mps,
                        "Anchor velocity in m/s (default 29 km/h)");
    ovh_cmd->add_option("--velocities", ovh.velocities, "Comma-separated velocities in m/s");
    ovh_cmd->add_option("--sizes", ovh.sizes, "Comma-separated azimuth sizes (default 25)");
    ovh_cmd->add_option("--d10-table", ovh.d10_table,
                        "CSV with m_azimuth,d10_wavelengths columns");
    ovh_cmd->add_option("--wavelength", ovh.wavelength, "Carrier wavelength in m (default 0.081)");
    ovh_cmd->add_option("--tc-ms", ovh.tc_ms,
                        "Fixed coherence time in ms, overriding the velocity scaling");
    ovh_cmd->add_option("--out", ovh.out, "Output CSV path")->required();

    PlotOpts plot;
    CLI::App* plot_cmd = app.add_subcommand("plot", "Render CSV columns as an SVG chart");
    plot_cmd->add_option("--csv", plot.csv, "Input CSV path")->required();
    plot_cmd->add_option("--x", plot.x, "X column name");
    plot_cmd->add_option("--y", plot.y, "Comma-separated Y column names")->required();
    plot_cmd->add_option("--out", plot.out, "Output SVG path")->required();
    plot_cmd->add_flag("--cdf", plot.cdf, "Draw empirical CDFs of the Y columns");
    plot_cmd->add_option("--title", plot.title, "Chart title");
    plot_cmd->add_option("--width", plot.width, "Chart width in px (default 800)");
    plot_cmd->add_option("--height", plot.height, "Chart height in px (default 500)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_cmd->parsed()) {
            cmd_generate(gen);
        } else if (sum_cmd->parsed()) {
            cmd_sumrate(sum);
        } else if (aging_cmd->parsed()) {
            cmd_aging(aging);
        } else if (coh_cmd->parsed()) {
            cmd_coherence(coh);
        } else if (d10_cmd->parsed()) {
            cmd_d10(d10);
        } else if (ovh_cmd->parsed()) {
            cmd_overhead(ovh);
        } else if (plot_cmd->parsed()) {
            cmd_plot(plot);
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "mmkit: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "mmkit: " << e.what() << "\n";
        return 2;
    } catch (const SingularChannel& e) {
        std::cerr << "mmkit: " << e.what() << "\n";
        return 3;
    } catch (const SingularMatrix& e) {
        std::cerr << "mmkit: " << e.what() << "\n";
        return 3;
    } catch (const InfeasibleTraining& e) {
        std::cerr << "mmkit: " << e.what() << "\n";
        return 3;
    } catch (const TraceFormatError& e) {
        std::cerr << "mmkit: " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        std::cerr << "mmkit: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "mmkit: " << e.what() << "\n";
        return 3;
    }
}

int run_app(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.emplace_back("mmkit");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) {
        argv.push_back(s.c_str());
    }
    return run_app(static_cast<int>(argv.size()), argv.data());
}

} // namespace mmkit
