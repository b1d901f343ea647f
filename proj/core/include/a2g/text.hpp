#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the CSV readers/writers and the CLI.
namespace a2g::text {

/// Shortest representation that parses back to the same double; -inf is
/// written as the literal `-inf`.
std::string format_number(double value);

/// Parses a finite decimal number or the literal `-inf`. Rejects nan, +inf,
/// trailing garbage.
std::optional<double> parse_number(std::string_view token);

std::string_view trim(std::string_view s) noexcept;
std::vector<std::string_view> split(std::string_view s, char delimiter);
std::string to_lower(std::string_view s);

}  // namespace a2g::text
