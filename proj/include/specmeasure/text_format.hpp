#pragma once

// Small helpers shared by every comma-delimited reader and writer.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace specmeasure::text {

/// Shortest decimal form that is guaranteed to round-trip (17 significant
/// digits); infinities and NaN print as inf, -inf, nan.
std::string format_double(double v);

/// Parses a complete decimal field (surrounding blanks allowed).
std::optional<double> parse_double(std::string_view field);

std::vector<std::string_view> split_fields(std::string_view line, char sep = ',');

std::string_view trim(std::string_view s);

}  // namespace specmeasure::text
