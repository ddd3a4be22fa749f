#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dtriage::core {

/// Minimal CSV reader: comma-separated, double-quoted fields with "" escapes,
/// quoted fields may span lines. Handles \n and \r\n row endings. A trailing
/// newline does not produce an empty final row.
std::vector<std::vector<std::string>> parse_csv(std::string_view bytes);

}  // namespace dtriage::core
