#include "dtriage/ingest/merge.hpp"

#include <algorithm>
#include <map>

#include "dtriage/catalog/validate.hpp"
#include "dtriage/core/error.hpp"
#include "dtriage/core/text.hpp"

namespace dtriage::ingest {

namespace {

std::string_view tri_state_text(catalog::TriState state) {
  switch (state) {
    case catalog::TriState::True: return "true";
    case catalog::TriState::False: return "false";
    case catalog::TriState::Unknown: return "unknown";
  }
  return "unknown";
}

catalog::RawObject to_raw(const StructuredRecord& structured, const AnnotationRecord& annotation) {
  catalog::RawObject raw;
  raw["cospar_id"] = structured.cospar_id.value();
  if (!structured.name.empty()) raw["name"] = structured.name;
  raw["object_type"] = std::string(catalog::to_string(structured.object_type));
  raw["orbit_class"] = std::string(catalog::to_string(structured.orbit_class));
  raw["launch_epoch"] = structured.launch_epoch.to_string();
  if (structured.reentry_epoch) raw["reentry_epoch"] = structured.reentry_epoch->to_string();
  if (structured.mass_kg) raw["mass_kg"] = core::format_double(*structured.mass_kg);

  raw["angular_rate_deg_s"] = core::format_double(annotation.angular_rate_deg_s);
  raw["passivated"] = std::string(tri_state_text(annotation.passivated));
  raw["propellant"] = std::string(catalog::to_string(annotation.propellant));
  if (!annotation.platform_name.empty()) raw["platform_name"] = annotation.platform_name;
  raw["grapple_feature"] = annotation.grapple_feature ? "true" : "false";
  raw["interface_material"] = std::string(catalog::to_string(annotation.interface_material));
  raw["interface_clearance_m2"] = core::format_double(annotation.interface_clearance_m2);
  if (annotation.failure_epoch) raw["failure_epoch"] = annotation.failure_epoch->to_string();
  if (annotation.failure_kind) raw["failure_kind"] = *annotation.failure_kind;
  return raw;
}

}  // namespace

MergeResult merge(std::span<const StructuredRecord> structured,
                  std::span<const AnnotationRecord> annotations) {
  std::map<catalog::CosparId, const StructuredRecord*> by_id;
  for (const auto& record : structured) {
    if (!by_id.emplace(record.cospar_id, &record).second) {
      throw Error("DuplicateId", "structured input repeats " + record.cospar_id.value());
    }
  }
  std::map<catalog::CosparId, const AnnotationRecord*> annotation_by_id;
  for (const auto& record : annotations) {
    if (!annotation_by_id.emplace(record.cospar_id, &record).second) {
      throw Error("DuplicateId", "annotation input repeats " + record.cospar_id.value());
    }
  }

  MergeResult result;
  for (const auto& [id, structured_record] : by_id) {
    const auto match = annotation_by_id.find(id);
    if (match == annotation_by_id.end()) {
      result.unmatched_structured.push_back(id);
      continue;
    }
    auto validated = catalog::validate_object(to_raw(*structured_record, *match->second));
    if (!validated.ok()) {
      std::string detail;
      for (const auto& error : validated.errors) {
        if (!detail.empty()) detail += "; ";
        detail += error.message;
      }
      throw Error("ValidationFailed", id.value() + ": " + detail);
    }
    result.objects.push_back(std::move(*validated.object));
  }
  for (const auto& [id, record] : annotation_by_id) {
    if (!by_id.contains(id)) result.unmatched_annotations.push_back(id);
  }
  return result;  // map iteration keeps everything ordered by cospar_id
}

}  // namespace dtriage::ingest
