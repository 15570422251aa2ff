#include "curvlab/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace curvlab {

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buffer{};
    const auto [end, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, kOutputDigits);
    if (ec != std::errc())
        throw std::runtime_error("number formatting failed");
    return std::string(buffer.data(), end);
}

double round_to_output(double value)
{
    if (!std::isfinite(value))
        return value;
    const std::string text = format_number(value);
    double rounded = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return rounded;
}

nlohmann::json json_number(double value)
{
    if (!std::isfinite(value))
        return nullptr;
    return round_to_output(value);
}

namespace {

std::string csv_field(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return format_number(v);
            else if constexpr (std::is_same_v<T, std::int64_t>)
                return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else if (v.find_first_of(",\"\n") == std::string::npos)
                return v;
            else {
                std::string quoted = "\"";
                for (const char c : v) {
                    if (c == '"')
                        quoted += '"';
                    quoted += c;
                }
                return quoted + '"';
            }
        },
        cell);
}

nlohmann::json json_cell(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return json_number(v);
            else
                return v;
        },
        cell);
}

} // namespace

void write_csv(const Report& report, std::ostream& out)
{
    for (const auto& [key, value] : report.metadata.items())
        out << "# " << key << ": " << value.dump() << '\n';
    for (std::size_t i = 0; i < report.columns.size(); ++i)
        out << (i ? "," : "") << report.columns[i];
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    }
}

void write_json(const Report& report, std::ostream& out)
{
    nlohmann::json doc;
    doc["metadata"] = report.metadata;
    doc["columns"] = report.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json object = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i)
            object[report.columns[i]] = json_cell(row[i]);
        rows.push_back(std::move(object));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

} // namespace curvlab
