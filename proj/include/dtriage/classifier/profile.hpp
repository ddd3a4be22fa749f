#pragma once

#include <optional>
#include <string_view>

#include "dtriage/catalog/types.hpp"
#include "dtriage/criticality/assessment.hpp"

namespace dtriage::classifier {

/// Attitude buckets partitioning [0, inf) by angular-rate magnitude:
/// 0 -> Stable, (0, slow_max) -> Slow, [slow_max, medium_max) -> Medium,
/// [medium_max, inf) -> Fast.
enum class AttitudeRegime { Stable, SlowTumbling, MediumTumbling, FastTumbling };

enum class ClearanceClass { Narrow, Broad };

/// Everything the rule engine looks at; no partial profiles.
struct UncooperativenessProfile {
  catalog::ObjectType object_type{catalog::ObjectType::Payload};
  criticality::Level criticality_level{criticality::Level::Low};
  bool passivated{false};
  AttitudeRegime regime{AttitudeRegime::Stable};
  bool grapple_feature{false};
  catalog::InterfaceMaterial material{catalog::InterfaceMaterial::Isotropic};
  ClearanceClass clearance{ClearanceClass::Narrow};
};

/// Throws Error("OutOfRange") for negative or non-finite rates.
AttitudeRegime attitude_regime(double omega_deg_s, const catalog::ThresholdConfig& cfg);

/// Broad at and above the threshold. Throws Error("OutOfRange") for
/// non-positive or non-finite areas.
ClearanceClass clearance_class(double area_m2, const catalog::ThresholdConfig& cfg);

/// Pure projection of object + assessment through the two classifiers above.
UncooperativenessProfile profile(const catalog::DebrisObject& object,
                                 const criticality::CriticalityAssessment& assessment,
                                 const catalog::ThresholdConfig& cfg);

std::string_view to_string(AttitudeRegime regime);
std::string_view to_string(ClearanceClass clearance);
std::optional<AttitudeRegime> regime_from_string(std::string_view text);
std::optional<ClearanceClass> clearance_from_string(std::string_view text);

}  // namespace dtriage::classifier
