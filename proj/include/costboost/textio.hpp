#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace costboost {

// Shortest decimal form that parses back to exactly the same double.
// Locale independent ('.' decimal point, no grouping).
std::string format_double(double v);

// Strict full-string parses; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

std::vector<std::string_view> split_ws(std::string_view line);
std::vector<std::string_view> split_char(std::string_view line, char sep);

std::string_view trim(std::string_view s);

// Drops a '#' comment (to end of line) and surrounding whitespace.
std::string_view strip_comment(std::string_view line);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

} // namespace costboost
