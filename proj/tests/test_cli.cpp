// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "mmkit/cli_app.hpp"
#include "mmkit/csv.hpp"

namespace fs = std::filesystem;

namespace {

/// Unique scratch directory, removed on destruction.
struct TempDir {
    fs::path path;

    TempDir() {
        std::random_device rd;
        std::mt19937_64 rng(rd());
        std::ostringstream name;
        name << "mmkit_test_" << std::hex << rng();
        path = fs::temp_directory_path() / name.str();
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run(const std::vector<std::string>& args) {
    return mmkit::run_app(args);
}

const char* kLosConfig = R"({
  "geometry": {"rows_elevation": 1, "cols_azimuth": 16},
  "terminals": [
    {"initial_position": [-8, 22, 0], "velocity": [8, 0, 0]},
    {"initial_position": [-2, 30, 0], "velocity": [8, 0, 0]}
  ],
  "model": "los-geometric",
  "num_snapshots": 200,
  "rng_seed": 11
})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("help and version exit cleanly") {
    CHECK(run({"--help"}) == 0);
    CHECK(run({"--version"}) == 0);
    CHECK(run({"sumrate", "--help"}) == 0);
}

TEST_CASE("bad invocations exit with the usage code") {
    TempDir dir;
    CHECK(run({}) == 2);                       // missing subcommand
    CHECK(run({"frobnicate"}) == 2);           // unknown subcommand
    CHECK(run({"generate", "--config"}) == 2); // missing value
    CHECK(run({"sumrate", "--trace", dir.file("t.bin"), "--decoder", "bogus", "--out",
               dir.file("o.csv")})
          == 2); // decoder outside {zf, mf}
}

TEST_CASE("generate writes a trace and a manifest deterministically") {
    TempDir dir;
    mmkit::write_text_file(dir.file("cfg.json"), kLosConfig);
    CHECK(run({"generate", "--config", dir.file("cfg.json"), "--out", dir.file("a.bin"),
               "--threads", "1"})
          == 0);
    CHECK(run({"generate", "--config", dir.file("cfg.json"), "--out", dir.file("b.bin"),
               "--threads", "4"})
          == 0);
    const std::string a = read_file(dir.file("a.bin"));
    CHECK(a == read_file(dir.file("b.bin")));
    CHECK(a.substr(0, 4) == "MMCT");

    const std::string manifest = read_file(dir.file("a.bin.manifest.json"));
    CHECK(manifest.find("\"tool\": \"mmkit\"") != std::string::npos);
    CHECK(manifest.find("\"subcommand\": \"generate\"") != std::string::npos);
    CHECK(manifest.find("\"rng_seed\": 11") != std::string::npos);
}

TEST_CASE("invalid configs exit with the usage code") {
    TempDir dir;
    mmkit::write_text_file(dir.file("bad.json"), R"({
      "geometry": {"rows_elevation": 1, "cols_azimuth": 2},
      "terminals": [
        {"initial_position": [0, 10, 0]},
        {"initial_position": [1, 10, 0]},
        {"initial_position": [2, 10, 0]}
      ],
      "model": "los-geometric",
      "num_snapshots": 5
    })");
    CHECK(run({"generate", "--config", dir.file("bad.json"), "--out", dir.file("t.bin")}) == 2);
    CHECK_FALSE(fs::exists(dir.file("t.bin")));
}

TEST_CASE("missing or corrupt inputs exit with the io code") {
    TempDir dir;
    CHECK(run({"sumrate", "--trace", dir.file("absent.bin"), "--decoder", "zf", "--out",
               dir.file("o.csv")})
          == 4);
    mmkit::write_text_file(dir.file("junk.bin"), "XXXX not a trace at all");
    CHECK(run({"coherence", "--trace", dir.file("junk.bin"), "--out", dir.file("o.csv")}) == 4);
    CHECK(run({"generate", "--config", dir.file("absent.json"), "--out", dir.file("t.bin")}) == 4);
}

TEST_CASE("sumrate emits the series, summary and cdf tables") {
    TempDir dir;
    mmkit::write_text_file(dir.file("cfg.json"), kLosConfig);
    REQUIRE(run({"generate", "--config", dir.file("cfg.json"), "--out", dir.file("t.bin")}) == 0);
    CHECK(run({"sumrate", "--trace", dir.file("t.bin"), "--decoder", "zf", "--snr-db", "30",
               "--out", dir.file("sr.csv"), "--cdf-out", dir.file("cdf.csv")})
          == 0);

    const mmkit::CsvTable series = mmkit::read_csv_file(dir.file("sr.csv"));
    REQUIRE(series.header.size() == 5); // t, b, sum_rate, two users
    CHECK(series.header[0] == "t");
    CHECK(series.header[1] == "b");
    CHECK(series.header[2] == "sum_rate");
    CHECK(series.header[3] == "sinr_user_0");
    CHECK(series.header[4] == "sinr_user_1");
    CHECK(series.rows.size() == 199); // T=200, one-sample decoder delay
    CHECK(series.rows.front()[0] == 1.0);

    const std::string summary = read_file(dir.file("sr.csv.summary.csv"));
    CHECK(summary.find("median_sum_rate,") != std::string::npos);
    CHECK(summary.find("median_per_user_rate,") != std::string::npos);
    CHECK(summary.find("mean_sinr_db,") != std::string::npos);

    const mmkit::CsvTable cdf = mmkit::read_csv_file(dir.file("cdf.csv"));
    REQUIRE(cdf.header.size() == 2);
    CHECK(cdf.header[0] == "sum_rate");
    CHECK(cdf.header[1] == "probability");
    CHECK(cdf.rows.back()[1] == 1.0);
}

TEST_CASE("aging reports both decoders with a unit reference") {
    TempDir dir;
    mmkit::write_text_file(dir.file("cfg.json"), kLosConfig);
    REQUIRE(run({"generate", "--config", dir.file("cfg.json"), "--out", dir.file("t.bin")}) == 0);
    CHECK(run({"aging", "--trace", dir.file("t.bin"), "--max-delta", "4", "--out",
               dir.file("aging.csv")})
          == 0);
    const std::string text = read_file(dir.file("aging.csv"));
    CHECK(text.find("delta_ms,gamma_zf,gamma_mf\n") == 0);
    CHECK(text.find("\n5,1,1\n") != std::string::npos); // reference age, ratio one

    const mmkit::CsvTable table = mmkit::read_csv_file(dir.file("aging.csv"));
    REQUIRE(table.rows.size() == 4);

    CHECK(run({"aging", "--trace", dir.file("t.bin"), "--decoder", "mf", "--out",
               dir.file("mf.csv")})
          == 0);
    const mmkit::CsvTable mf = mmkit::read_csv_file(dir.file("mf.csv"));
    REQUIRE(mf.header.size() == 2);
    CHECK(mf.header[1] == "gamma_mf");
}

TEST_CASE("coherence marks a profile that never crosses") {
    TempDir dir;
    mmkit::write_text_file(dir.file("static.json"), R"({
      "geometry": {"rows_elevation": 1, "cols_azimuth": 8},
      "terminals": [{"initial_position": [0, 25, 0]}],
      "model": "los-geometric",
      "num_snapshots": 20
    })");
    REQUIRE(run({"generate", "--config", dir.file("static.json"), "--out", dir.file("t.bin")})
            == 0);
    CHECK(run({"coherence", "--trace", dir.file("t.bin"), "--out", dir.file("coh.csv")}) == 0);
    const mmkit::CsvTable profile = mmkit::read_csv_file(dir.file("coh.csv"));
    CHECK(profile.header[0] == "lag_ms");
    CHECK(profile.header[1] == "correlation");
    CHECK(profile.rows.size() == 20); // lags 0..19
    const std::string summary = read_file(dir.file("coh.csv.summary.csv"));
    CHECK(summary.find("no_crossing,true") != std::string::npos);
    CHECK(summary.find("coherence_time_ms,inf") != std::string::npos);
}

TEST_CASE("d10 reconstructs the array shape from elevation rows") {
    TempDir dir;
    mmkit::write_text_file(dir.file("cfg.json"), kLosConfig);
    REQUIRE(run({"generate", "--config", dir.file("cfg.json"), "--out", dir.file("t.bin")}) == 0);
    CHECK(run({"d10", "--trace", dir.file("t.bin"), "--sizes", "4,8", "--speed", "8", "--out",
               dir.file("d10.csv")})
          == 0);
    const mmkit::CsvTable table = mmkit::read_csv_file(dir.file("d10.csv"));
    REQUIRE(table.header.size() == 3);
    CHECK(table.header[0] == "m_azimuth");
    CHECK(table.header[1] == "d10_wavelengths");
    CHECK(table.header[2] == "median_rate");
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0][0] == 4.0);
    CHECK(table.rows[1][0] == 8.0);
    CHECK(table.rows[0][1] > table.rows[1][1]); // narrower aperture stays coherent longer
    CHECK(table.rows[0][2] > 0.0);

    // rows that do not divide the antenna count are rejected
    CHECK(run({"d10", "--trace", dir.file("t.bin"), "--sizes", "4", "--speed", "8",
               "--elevation-rows", "3", "--out", dir.file("bad.csv")})
          == 2);
}

TEST_CASE("overhead reproduces the fixed-budget row") {
    TempDir dir;
    CHECK(run({"overhead", "--velocities", "100", "--tc-ms", "10", "--out", dir.file("ovh.csv")})
          == 0);
    const std::string text = read_file(dir.file("ovh.csv"));
    CHECK(text.find("m_azimuth,velocity_mps,tc_ms,n_smooth,n_slot,tau_c,n_train,overhead_percent")
          == 0);
    CHECK(text.find("20,140,2800,3") != std::string::npos);
    CHECK(text.find("2.142857") != std::string::npos);
}

TEST_CASE("overhead reads decorrelation distances from a table") {
    TempDir dir;
    mmkit::write_text_file(dir.file("d10.csv"),
                           "m_azimuth,d10_wavelengths,median_rate\n25,7,11.5\n");
    CHECK(run({"overhead", "--d10-table", dir.file("d10.csv"), "--sizes", "25", "--velocities",
               "8", "--out", dir.file("ovh.csv")})
          == 0);
    const mmkit::CsvTable table = mmkit::read_csv_file(dir.file("ovh.csv"));
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0][0] == 25.0);
    // tc = 7 wavelengths * 0.081 m / (8 m/s)
    CHECK(table.rows[0][2] == doctest::Approx(7.0 * 0.081 / 8.0 * 1e3).epsilon(1e-12));

    CHECK(run({"overhead", "--d10-table", dir.file("d10.csv"), "--sizes", "16", "--velocities",
               "8", "--out", dir.file("bad.csv")})
          == 2);
}

TEST_CASE("infeasible training exits with the numeric code") {
    TempDir dir;
    CHECK(run({"overhead", "--users", "1000000", "--velocities", "100", "--out",
               dir.file("ovh.csv")})
          == 3);
}

TEST_CASE("plot renders lines and cdfs and validates columns") {
    TempDir dir;
    mmkit::write_text_file(dir.file("cfg.json"), kLosConfig);
    REQUIRE(run({"generate", "--config", dir.file("cfg.json"), "--out", dir.file("t.bin")}) == 0);
    REQUIRE(run({"aging", "--trace", dir.file("t.bin"), "--out", dir.file("aging.csv")}) == 0);
    CHECK(run({"plot", "--csv", dir.file("aging.csv"), "--x", "delta_ms", "--y",
               "gamma_zf,gamma_mf", "--out", dir.file("chart.svg"), "--title", "decoder aging"})
          == 0);
    const std::string svg = read_file(dir.file("chart.svg"));
    std::size_t lines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++lines;
    }
    CHECK(lines == 2);
    CHECK(svg.find("decoder aging") != std::string::npos);

    REQUIRE(run({"sumrate", "--trace", dir.file("t.bin"), "--decoder", "zf", "--out",
                 dir.file("sr.csv")})
            == 0);
    CHECK(run({"plot", "--csv", dir.file("sr.csv"), "--y", "sum_rate", "--cdf", "--out",
               dir.file("cdf.svg")})
          == 0);
    CHECK(read_file(dir.file("cdf.svg")).find("<polyline") != std::string::npos);

    CHECK(run({"plot", "--csv", dir.file("aging.csv"), "--x", "delta_ms", "--y", "nope",
               "--out", dir.file("x.svg")})
          == 2);
    CHECK(run({"plot", "--csv", dir.file("aging.csv"), "--y", "gamma_zf", "--out",
               dir.file("x.svg")})
          == 2); // no --x and no --cdf
}

TEST_CASE("coinciding terminals make zero forcing exit with the numeric code") {
    TempDir dir;
    mmkit::write_text_file(dir.file("dup.json"), R"({
      "geometry": {"rows_elevation": 1, "cols_azimuth": 8},
      "terminals": [
        {"initial_position": [0, 25, 0]},
        {"initial_position": [0, 25, 0]}
      ],
      "model": "los-geometric",
      "num_snapshots": 6
    })");
    REQUIRE(run({"generate", "--config", dir.file("dup.json"), "--out", dir.file("t.bin")}) == 0);
    CHECK(run({"sumrate", "--trace", dir.file("t.bin"), "--decoder", "zf", "--out",
               dir.file("sr.csv")})
          == 3);
    CHECK(run({"sumrate", "--trace", dir.file("t.bin"), "--decoder", "mf", "--out",
               dir.file("sr.csv")})
          == 0);
}

TEST_CASE("the analysis pipeline is byte-stable across runs and threads") {
    TempDir dir;
    mmkit::write_text_file(dir.file("cfg.json"), R"({
      "geometry": {"rows_elevation": 2, "cols_azimuth": 8},
      "terminals": [
        {"initial_position": [-6, 20, 0], "velocity": [8, 0, 0]},
        {"initial_position": [-2, 28, 0], "velocity": [8, 0, 0], "num_antennas": 2},
        {"initial_position": [3, 36, 0], "velocity": [8, 0, 0]}
      ],
      "model": "jakes",
      "doppler_hz": 30,
      "num_snapshots": 60,
      "num_blocks": 2,
      "rng_seed": 20240817
    })");
    auto pipeline = [&](const std::string& tag, const std::string& threads) {
        REQUIRE(run({"generate", "--config", dir.file("cfg.json"), "--out",
                     dir.file(tag + ".bin"), "--threads", threads})
                == 0);
        REQUIRE(run({"sumrate", "--trace", dir.file(tag + ".bin"), "--decoder", "zf", "--out",
                     dir.file(tag + "_sr.csv"), "--threads", threads})
                == 0);
        REQUIRE(run({"aging", "--trace", dir.file(tag + ".bin"), "--out",
                     dir.file(tag + "_aging.csv"), "--threads", threads})
                == 0);
        REQUIRE(run({"coherence", "--trace", dir.file(tag + ".bin"), "--out",
                     dir.file(tag + "_coh.csv"), "--threads", threads})
                == 0);
    };
    pipeline("a", "1");
    pipeline("b", "4");
    CHECK(read_file(dir.file("a.bin")) == read_file(dir.file("b.bin")));
    CHECK(read_file(dir.file("a_sr.csv")) == read_file(dir.file("b_sr.csv")));
    CHECK(read_file(dir.file("a_aging.csv")) == read_file(dir.file("b_aging.csv")));
    CHECK(read_file(dir.file("a_coh.csv")) == read_file(dir.file("b_coh.csv")));
}

} // TEST_SUITE
