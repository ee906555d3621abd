#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dslv::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

/// 17 significant digits, '.' separator, independent of the C locale.
std::string format_number(double v);

/// RFC-4180 field quoting: quoted only when the field holds ',', '"', CR or LF.
std::string csv_field(std::string_view s);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_comment(std::string_view key, const Json& value);
    void add_row(std::vector<std::string> cells);

    std::string str() const;

private:
    std::vector<std::string> comments_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// {tool, version, schema_version, command, options}
Json make_manifest(std::string_view command, Json options);

/// Writes `content` to `path`, or to stdout when path is "-".
void write_output(const std::string& path, const std::string& content);

} // namespace dslv::cli
