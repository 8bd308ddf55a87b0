// SPDX-License-Identifier: Apache-2.0

#include "mmkit/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mmkit/errors.hpp"

namespace mmkit {

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

double parse_number(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ConfigError("csv: line " + std::to_string(line_no) + ": cannot parse number '"
                          + field + "'");
    }
    return value;
}

} // namespace

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open csv file: " + path);
    }
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (table.header.empty()) {
            table.header = split_line(line);
            continue;
        }
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != table.header.size()) {
            throw ConfigError("csv: line " + std::to_string(line_no) + ": expected "
                              + std::to_string(table.header.size()) + " fields, got "
                              + std::to_string(fields.size()));
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& f : fields) {
            row.push_back(parse_number(f, line_no));
        }
        table.rows.push_back(std::move(row));
    }
    if (in.bad()) {
        throw IoError("cannot read csv file: " + path);
    }
    if (table.header.empty()) {
        throw ConfigError("csv: " + path + " is empty");
    }
    return table;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

} // namespace mmkit
