#include "dtriage/classifier/profile.hpp"

#include <cmath>

#include "dtriage/core/error.hpp"

namespace dtriage::classifier {

AttitudeRegime attitude_regime(double omega_deg_s, const catalog::ThresholdConfig& cfg) {
  if (!std::isfinite(omega_deg_s) || omega_deg_s < 0.0) {
    throw Error("OutOfRange", "angular rate must be finite and non-negative");
  }
  if (omega_deg_s == 0.0) return AttitudeRegime::Stable;
  if (omega_deg_s < cfg.slow_max_deg_s) return AttitudeRegime::SlowTumbling;
  if (omega_deg_s < cfg.medium_max_deg_s) return AttitudeRegime::MediumTumbling;
  return AttitudeRegime::FastTumbling;
}

ClearanceClass clearance_class(double area_m2, const catalog::ThresholdConfig& cfg) {
  if (!std::isfinite(area_m2) || !(area_m2 > 0.0)) {
    throw Error("OutOfRange", "clearance area must be finite and positive");
  }
  return area_m2 < cfg.clearance_broad_min_m2 ? ClearanceClass::Narrow : ClearanceClass::Broad;
}

UncooperativenessProfile profile(const catalog::DebrisObject& object,
                                 const criticality::CriticalityAssessment& assessment,
                                 const catalog::ThresholdConfig& cfg) {
  return {
      object.object_type,
      assessment.level,
      object.passivated,
      attitude_regime(object.angular_rate_deg_s, cfg),
      object.grapple_feature,
      object.interface_material,
      clearance_class(object.interface_clearance_m2, cfg),
  };
}

std::string_view to_string(AttitudeRegime regime) {
  switch (regime) {
    case AttitudeRegime::Stable: return "stable";
    case AttitudeRegime::SlowTumbling: return "slow";
    case AttitudeRegime::MediumTumbling: return "medium";
    case AttitudeRegime::FastTumbling: return "fast";
  }
  return "stable";
}

std::string_view to_string(ClearanceClass clearance) {
  return clearance == ClearanceClass::Narrow ? "narrow" : "broad";
}

std::optional<AttitudeRegime> regime_from_string(std::string_view text) {
  if (text == "stable") return AttitudeRegime::Stable;
  if (text == "slow") return AttitudeRegime::SlowTumbling;
  if (text == "medium") return AttitudeRegime::MediumTumbling;
  if (text == "fast") return AttitudeRegime::FastTumbling;
  return std::nullopt;
}

std::optional<ClearanceClass> clearance_from_string(std::string_view text) {
  if (text == "narrow") return ClearanceClass::Narrow;
  if (text == "broad") return ClearanceClass::Broad;
  return std::nullopt;
}

}  // namespace dtriage::classifier
