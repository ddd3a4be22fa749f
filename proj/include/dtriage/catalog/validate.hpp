#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtriage/catalog/types.hpp"

namespace dtriage::catalog {

/// Untyped field map as assembled by ingestion or read back from disk.
/// Absent optional fields are simply missing keys (empty string == missing).
using RawObject = std::map<std::string, std::string>;

enum class ValidationCode {
  MalformedId,
  DateOrderViolation,
  NegativeQuantity,
  UnknownEnumValue,
  MissingField,
  MalformedValue,
};

struct ValidationError {
  ValidationCode code;
  std::string field;
  std::string message;
};

/// Either a validated object or at least one error, never both, never neither.
struct ValidationResult {
  std::optional<DebrisObject> object;
  std::vector<ValidationError> errors;

  bool ok() const noexcept { return object.has_value(); }
};

/// Validates every field and returns the complete list of violations rather
/// than stopping at the first.
///
/// Recognized keys, in the order they are persisted:
///   cospar_id, name, object_type, orbit_class, launch_epoch, reentry_epoch,
///   deactivation_epoch, failure_epoch, failure_kind, passivated, propellant,
///   platform_name, mass_kg, angular_rate_deg_s, grapple_feature,
///   interface_material, interface_clearance_m2
///
/// passivated accepts true/false/unknown; unknown collapses to false. A raw
/// "true" is taken as the curated documented-passivation flag, so no further
/// supporting field is required.
ValidationResult validate_object(const RawObject& raw);

std::string_view to_string(ValidationCode code);

/// Fixed persistence key order (also the documented record layout).
const std::vector<std::string>& object_field_order();

/// Inverse of validation for one object: a raw map that validates back to an
/// equal object. Used by the store and by the ingest merge step.
RawObject to_raw(const DebrisObject& object);

}  // namespace dtriage::catalog
