// SPDX-License-Identifier: Apache-2.0

#include "mmkit/trace_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "mmkit/errors.hpp"

namespace mmkit {

namespace {

constexpr char kMagic[4] = {'M', 'M', 'C', 'T'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::size_t kHeaderBytes = 36;
constexpr std::size_t kEntryBytes = 16;

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_f64(std::string& out, double v) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int shift = 0; shift < 64; shift += 8) {
        out.push_back(static_cast<char>((bits >> shift) & 0xff));
    }
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8)
           | (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

double get_f64(const unsigned char* p) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) {
        bits = (bits << 8) | p[i];
    }
    return std::bit_cast<double>(bits);
}

std::uint64_t entry_count_checked(std::uint64_t t, std::uint64_t b, std::uint64_t k,
                                  std::uint64_t m) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / kEntryBytes;
    std::uint64_t count = t;
    for (std::uint64_t dim : {b, k, m}) {
        if (dim != 0 && count > limit / dim) {
            throw TraceFormatError("trace: dimensions overflow the addressable payload size");
        }
        count *= dim;
    }
    return count;
}

} // namespace

void write_trace(const ChannelTrace& trace, std::ostream& out) {
    trace.validate();
    const std::uint32_t max32 = std::numeric_limits<std::uint32_t>::max();
    if (trace.num_snapshots > max32 || trace.num_blocks > max32 || trace.num_streams > max32
        || trace.num_antennas > max32) {
        throw DimensionError("trace: dimensions exceed the 32-bit header fields");
    }

    std::string buf;
    buf.reserve(kHeaderBytes + trace.entries.size() * kEntryBytes);
    buf.append(kMagic, sizeof(kMagic));
    put_u32(buf, kFormatVersion);
    put_u32(buf, static_cast<std::uint32_t>(trace.num_snapshots));
    put_u32(buf, static_cast<std::uint32_t>(trace.num_blocks));
    put_u32(buf, static_cast<std::uint32_t>(trace.num_streams));
    put_u32(buf, static_cast<std::uint32_t>(trace.num_antennas));
    put_u32(buf, trace.sample_period_us);
    put_f64(buf, trace.carrier_wavelength);
    for (const Complex& e : trace.entries) {
        put_f64(buf, e.real());
        put_f64(buf, e.imag());
    }

    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) {
        throw IoError("trace: write failed");
    }
}

ChannelTrace read_trace(std::istream& in) {
    unsigned char header[kHeaderBytes];
    in.read(reinterpret_cast<char*>(header), kHeaderBytes);
    const std::uint64_t header_got = static_cast<std::uint64_t>(in.gcount());
    if (header_got < kHeaderBytes) {
        throw TruncatedTrace(kHeaderBytes, header_got);
    }
    if (std::memcmp(header, kMagic, sizeof(kMagic)) != 0) {
        std::string found;
        for (std::size_t i = 0; i < sizeof(kMagic); ++i) {
            const unsigned char c = header[i];
            if (c >= 0x20 && c < 0x7f) {
                found.push_back(static_cast<char>(c));
            } else {
                char esc[8];
                std::snprintf(esc, sizeof(esc), "\\x%02x", c);
                found += esc;
            }
        }
        throw BadMagic(found);
    }
    const std::uint32_t version = get_u32(header + 4);
    if (version != kFormatVersion) {
        throw VersionMismatch(version);
    }

    ChannelTrace trace;
    trace.num_snapshots = get_u32(header + 8);
    trace.num_blocks = get_u32(header + 12);
    trace.num_streams = get_u32(header + 16);
    trace.num_antennas = get_u32(header + 20);
    trace.sample_period_us = get_u32(header + 24);
    trace.carrier_wavelength = get_f64(header + 28);
    if (trace.num_snapshots == 0 || trace.num_blocks == 0 || trace.num_streams == 0
        || trace.num_antennas == 0) {
        throw TraceFormatError("trace: header contains a zero dimension");
    }
    if (trace.sample_period_us == 0) {
        throw TraceFormatError("trace: header sample period is zero");
    }
    if (!std::isfinite(trace.carrier_wavelength) || !(trace.carrier_wavelength > 0.0)) {
        throw TraceFormatError("trace: header carrier wavelength is not positive");
    }

    const std::uint64_t count = entry_count_checked(trace.num_snapshots, trace.num_blocks,
                                                    trace.num_streams, trace.num_antennas);
    const std::uint64_t payload_bytes = count * kEntryBytes;
    std::vector<unsigned char> payload(static_cast<std::size_t>(payload_bytes));
    in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(payload_bytes));
    const std::uint64_t payload_got = static_cast<std::uint64_t>(in.gcount());
    if (payload_got < payload_bytes) {
        throw TruncatedTrace(kHeaderBytes + payload_bytes, kHeaderBytes + payload_got);
    }

    trace.entries.resize(static_cast<std::size_t>(count));
    for (std::uint64_t i = 0; i < count; ++i) {
        const unsigned char* p = payload.data() + i * kEntryBytes;
        const double re = get_f64(p);
        const double im = get_f64(p + 8);
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw NonFiniteData(i);
        }
        trace.entries[static_cast<std::size_t>(i)] = Complex{re, im};
    }
    return trace;
}

void write_trace_file(const ChannelTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    write_trace(trace, out);
    out.flush();
    if (!out) {
        throw IoError("trace: write failed: " + path);
    }
}

ChannelTrace read_trace_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open trace file: " + path);
    }
    return read_trace(in);
}

} // namespace mmkit
