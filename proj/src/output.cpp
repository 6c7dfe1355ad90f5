#include "cslbounds/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cslbounds {

OutputTable::OutputTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("OutputTable: need at least one column");
}

void OutputTable::add_row(const std::vector<double>& row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument("OutputTable: row width does not match column count");
    }
    rows_.push_back(row);
}

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        throw std::runtime_error("refusing to serialize non-finite value");
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

// Column names avoid commas and quotes by construction, but quote
// defensively per RFC 4180 anyway.
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string json_escape(const std::string& field) {
    std::string out;
    for (const char c : field) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string OutputTable::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ',';
        out += csv_escape(columns_[c]);
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string OutputTable::to_json() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out += (r ? ",\n " : "\n ");
        out += '{';
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c) out += ", ";
            out += '"';
            out += json_escape(columns_[c]);
            out += "\": ";
            out += format_double(rows_[r][c]);
        }
        out += '}';
    }
    out += "\n]\n";
    return out;
}

std::string OutputTable::render(OutputFormat format) const {
    return format == OutputFormat::Csv ? to_csv() : to_json();
}

void OutputTable::write(const std::string& path, OutputFormat format) const {
    const std::string body = render(format);
    if (path == "-") {
        std::fwrite(body.data(), 1, body.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace cslbounds
