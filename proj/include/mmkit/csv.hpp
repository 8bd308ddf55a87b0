// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmkit {

/// Shortest round-trip decimal form, always with '.' as separator.
std::string format_double(double v);

/// Numeric CSV with a header row.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::optional<std::size_t> column(std::string_view name) const;
};

CsvTable read_csv_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

} // namespace mmkit
