#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtriage/catalog/types.hpp"
#include "dtriage/ingest/structured.hpp"

namespace dtriage::ingest {

/// One curated annotation row: the attitude, passivation, propellant and
/// capture-interface data that structured feeds do not carry.
struct AnnotationRecord {
  catalog::CosparId cospar_id;
  double angular_rate_deg_s{0.0};
  catalog::TriState passivated{catalog::TriState::Unknown};
  catalog::PropellantClass propellant{catalog::PropellantClass::Unknown};
  std::string platform_name;
  bool grapple_feature{false};
  catalog::InterfaceMaterial interface_material{catalog::InterfaceMaterial::Isotropic};
  double interface_clearance_m2{0.0};
  std::optional<core::Date> failure_epoch;
  std::optional<std::string> failure_kind;
};

struct AnnotationTable {
  std::vector<AnnotationRecord> records;
  std::vector<Diagnostic> diagnostics;
};

/// Parses the annotation CSV. The header is validated by column name (order
/// does not matter); unknown columns are ignored with a diagnostic.
///
/// Expected columns:
///   cospar_id, angular_rate_deg_s, passivated, propellant_class,
///   platform_name, grapple_feature, interface_material,
///   interface_clearance_m2, failure_epoch, failure_kind
///
/// Throws Error("MissingHeader"), Error("MissingColumn"), or
/// Error("UnparsableCell") with the 1-based row and column name — curated
/// input is parsed strictly, a bad cell aborts the whole table.
AnnotationTable parse_annotations(std::string_view bytes);

}  // namespace dtriage::ingest
