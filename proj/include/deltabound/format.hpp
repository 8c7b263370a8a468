#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deltabound {

/// Fixed-point decimal with '.' separator and no grouping, independent of
/// the global locale (std::to_chars underneath).
std::string format_fixed(double value, int precision = 6);

/// Shortest round-trip representation, locale-independent.
std::string format_shortest(double value);

/// Locale-independent double parse of a full token; nullopt on any trailing
/// garbage or empty input.
std::optional<double> parse_double(std::string_view token);

/// Splits one CSV line on ',' without quoting rules (none of our schemas
/// need them).
std::vector<std::string> split_csv(std::string_view line);

}  // namespace deltabound
