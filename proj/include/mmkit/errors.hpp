// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mmkit {

/// Shape or index violation in a matrix/tensor operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix inversion found a pivot below the singularity tolerance.
class SingularMatrix : public std::runtime_error {
public:
    SingularMatrix(const std::string& what, std::size_t pivot_index)
        : std::runtime_error(what), pivot_index_(pivot_index) {}
    std::size_t pivot_index() const { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

/// The Gram matrix of a channel snapshot is rank deficient.
class SingularChannel : public std::runtime_error {
public:
    SingularChannel(const std::string& what, std::size_t pivot_index)
        : std::runtime_error(what), pivot_index_(pivot_index) {}
    std::size_t pivot_index() const { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

/// Invalid scenario/model parameter; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested users cannot be trained within one coherence interval.
class InfeasibleTraining : public std::runtime_error {
public:
    InfeasibleTraining(const std::string& what, double velocity_mps)
        : std::runtime_error(what), velocity_mps_(velocity_mps) {}
    double velocity_mps() const { return velocity_mps_; }

private:
    double velocity_mps_;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Base class for malformed trace streams.
class TraceFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BadMagic final : public TraceFormatError {
public:
    explicit BadMagic(const std::string& found)
        : TraceFormatError("trace: bad magic '" + found + "' (expected 'MMCT')"), found_(found) {}
    const std::string& found() const { return found_; }

private:
    std::string found_;
};

class VersionMismatch final : public TraceFormatError {
public:
    explicit VersionMismatch(std::uint32_t found)
        : TraceFormatError("trace: unsupported format version " + std::to_string(found)),
          found_(found) {}
    std::uint32_t found() const { return found_; }

private:
    std::uint32_t found_;
};

class TruncatedTrace final : public TraceFormatError {
public:
    TruncatedTrace(std::uint64_t expected_bytes, std::uint64_t actual_bytes)
        : TraceFormatError("trace: truncated stream (expected " + std::to_string(expected_bytes)
                           + " bytes, got " + std::to_string(actual_bytes) + ")"),
          expected_bytes_(expected_bytes),
          actual_bytes_(actual_bytes) {}
    std::uint64_t expected_bytes() const { return expected_bytes_; }
    std::uint64_t actual_bytes() const { return actual_bytes_; }

private:
    std::uint64_t expected_bytes_;
    std::uint64_t actual_bytes_;
};

class NonFiniteData final : public TraceFormatError {
public:
    explicit NonFiniteData(std::uint64_t entry_index)
        : TraceFormatError("trace: non-finite value at entry " + std::to_string(entry_index)),
          entry_index_(entry_index) {}
    std::uint64_t entry_index() const { return entry_index_; }

private:
    std::uint64_t entry_index_;
};

} // namespace mmkit
