#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtriage/catalog/types.hpp"

namespace dtriage::ingest {

/// One parse-time problem, pointing at the offending location
/// ("data[3].attributes.cosparId") so nothing is dropped silently.
struct Diagnostic {
  std::string where;
  std::string message;
};

/// One resource from a structured catalog export.
struct StructuredRecord {
  catalog::CosparId cospar_id;
  std::string name;
  catalog::ObjectType object_type{catalog::ObjectType::Payload};
  core::Date launch_epoch;
  std::optional<core::Date> reentry_epoch;
  catalog::OrbitClass orbit_class{catalog::OrbitClass::Leo};
  std::optional<double> mass_kg;
  std::optional<std::string> dimensions;
  std::optional<std::string> launcher_name;
  std::optional<std::string> country;
};

struct StructuredDocument {
  std::vector<StructuredRecord> records;
  std::vector<Diagnostic> diagnostics;
  /// Pagination link from `links.next`, surfaced so callers can fetch the
  /// following page themselves; parsing stays file-based.
  std::optional<std::string> next_link;
};

/// Parses a resource-collection document: top-level `data` array of resources
/// whose `attributes` carry cosparId, name, objectClass ("Payload" /
/// "Rocket Body"), launchEpoch, reentryEpoch, orbitClass, mass, and the
/// optional launcherName / country / dimensions annotations.
///
/// Malformed resources are skipped with a diagnostic; a malformed document
/// (not an object, `data` missing or not an array) throws
/// Error("MalformedDocument"), and a `jsonapi.version` other than "1.0"
/// throws Error("UnsupportedVersion").
StructuredDocument parse_structured_document(std::string_view bytes);

}  // namespace dtriage::ingest
