#include "output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include "dslv/error.hpp"

namespace dslv::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void CsvTable::add_comment(std::string_view key, const Json& value) {
    comments_.push_back("# " + std::string(key) + ": " + value.dump());
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) fail(ErrorKind::invalid_argument, "csv row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::string out;
    for (const auto& c : comments_) out += c + '\n';
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_field(cells[i]);
        }
        out += '\n';
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
    return out;
}

Json make_manifest(std::string_view command, Json options) {
    Json m;
    m["tool"] = "dslv";
    m["version"] = kToolVersion;
    m["schema_version"] = kSchemaVersion;
    m["command"] = command;
    m["options"] = std::move(options);
    return m;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::invalid_argument, "cannot open output file '" + path + "'");
    out << content;
    if (!out) fail(ErrorKind::numeric, "failed writing '" + path + "'");
}

} // namespace dslv::cli
