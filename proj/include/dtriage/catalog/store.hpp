#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "dtriage/catalog/types.hpp"

namespace dtriage::catalog {

inline constexpr std::string_view kStoreFormatVersion = "debris-triage/1";

/// Serializes to the persistence format: a version header line followed by
/// one JSON record per line, fields in the documented fixed order, records
/// sorted by cospar_id. Same set in, same bytes out.
std::string serialize_store(std::span<const DebrisObject> objects);

/// Parses store bytes. Throws Error("CorruptRecord") carrying the 1-based
/// line number (header line is line 1) for any undecodable or invalid line.
std::vector<DebrisObject> parse_store(std::string_view bytes);

/// Writes atomically; returns the record count. Throws Error("IoFailure").
std::size_t store(std::span<const DebrisObject> objects, const std::filesystem::path& path);

std::vector<DebrisObject> load(const std::filesystem::path& path);

}  // namespace dtriage::catalog
