// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "mmkit/channel_trace.hpp"

namespace mmkit {

// Binary trace container, little-endian:
//   bytes  0-3   magic "MMCT"
//   bytes  4-7   format version (u32, currently 1)
//   bytes  8-23  T, B, K, M (u32 each)
//   bytes 24-27  sample period in microseconds (u32)
//   bytes 28-35  carrier wavelength in meters (f64)
//   payload      T*B*K*M entries as (re f64, im f64), t-major then b, k, m

void write_trace(const ChannelTrace& trace, std::ostream& out);
ChannelTrace read_trace(std::istream& in);

void write_trace_file(const ChannelTrace& trace, const std::string& path);
ChannelTrace read_trace_file(const std::string& path);

} // namespace mmkit
