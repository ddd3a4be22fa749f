#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dtriage::core {

std::string_view trim(std::string_view text);

std::vector<std::string> split(std::string_view text, char separator);

/// Shortest round-trip decimal form ("41.96", "0.0255", "2e-05").
/// One representation per value, so emitted files are byte-deterministic.
std::string format_double(double value);

std::optional<double> parse_double(std::string_view text);  // finite values only

std::optional<long> parse_long(std::string_view text);

/// Quotes a CSV field when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

}  // namespace dtriage::core
