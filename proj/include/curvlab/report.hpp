#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace curvlab {

/// Number of significant digits for every floating-point value written out.
inline constexpr int kOutputDigits = 12;

/// Locale-independent %.12g rendering; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double value);

/// value rounded to kOutputDigits significant digits (non-finite values pass through).
double round_to_output(double value);

/// JSON number rounded to output precision, or null when non-finite.
nlohmann::json json_number(double value);

using Cell = std::variant<double, std::int64_t, std::string, bool>;

/// A rectangular result table plus free-form metadata. Written either as CSV
/// (metadata as leading "# key: value" lines, then the header row) or as JSON
/// ({"metadata": ..., "columns": [...], "rows": [{...}, ...]}).
struct Report {
    nlohmann::json metadata = nlohmann::json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void write_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);

} // namespace curvlab
