#include "dtriage/criticality/assessment.hpp"

#include <cmath>

#include "dtriage/core/error.hpp"
#include "dtriage/core/text.hpp"

namespace dtriage::criticality {

namespace {

std::string age_text(double age_years) {
  return core::format_double(age_years) + " y";
}

}  // namespace

SeverityResult severity_number(const catalog::DebrisObject& object, double age_years,
                               const catalog::ThresholdConfig& cfg) {
  if (object.object_type == catalog::ObjectType::Payload) {
    return {2, "severity: payload worst-case fragmentation -> SN 2"};
  }
  if (object.passivated) {
    return {1, "severity: passivated rocket body, anomalous worst case -> SN 1"};
  }
  if (age_years <= cfg.rb_fresh_age_years) {
    return {4, "severity: non-passivated rocket body, orbit age " + age_text(age_years) +
                   " <= " + age_text(cfg.rb_fresh_age_years) + ", any propellant -> SN 4"};
  }
  const std::string aged = "severity: non-passivated rocket body, orbit age " +
                           age_text(age_years) + " > " + age_text(cfg.rb_fresh_age_years) + ", ";
  switch (object.propellant) {
    case catalog::PropellantClass::Hypergolic:
      return {3, aged + "hypergolic propellant -> SN 3"};
    case catalog::PropellantClass::Cryogenic:
      return {2, aged + "cryogenic propellant -> SN 2"};
    case catalog::PropellantClass::Petroleum:
      return {1, aged + "petroleum propellant -> SN 1"};
    case catalog::PropellantClass::Solid:
      return {1, aged + "solid propellant -> SN 1"};
    case catalog::PropellantClass::NoPropellant:
      return {cfg.no_propellant_sn,
              aged + "no propellant -> SN " + std::to_string(cfg.no_propellant_sn)};
    default:
      // Hybrid/Other/Unknown: the severity table has no row; take the
      // configured conservative default and say so.
      return {cfg.aged_rb_fallback_sn,
              aged + std::string(catalog::to_string(object.propellant)) +
                  " propellant (no severity row, conservative default) -> SN " +
                  std::to_string(cfg.aged_rb_fallback_sn)};
  }
}

int probability_number(double p, const catalog::ThresholdConfig& cfg) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw Error("OutOfRange", "breakup probability must lie in [0, 1]");
  }
  for (const auto& bracket : cfg.pn_limits) {
    if (p <= bracket.upper_bound) return bracket.pn;
  }
  return cfg.pn_limits.back().pn;  // unreachable with a validated config
}

int criticality_number(int sn, int pn) {
  if (sn < 1 || sn > 4 || pn < 1 || pn > 4) {
    throw Error("OutOfRange", "SN and PN must lie in [1, 4]");
  }
  return sn * pn;
}

Level criticality_level(int sn, int cn) {
  if (sn == 4 || cn >= 8) return Level::High;  // High triggers take precedence
  if (cn == 6) return Level::Medium;
  return Level::Low;
}

CriticalityAssessment assess(const catalog::DebrisObject& object, double probability,
                             double age_years, const catalog::ThresholdConfig& cfg) {
  CriticalityAssessment assessment;
  auto severity = severity_number(object, age_years, cfg);
  assessment.sn = severity.sn;
  assessment.rationale.push_back(std::move(severity.rationale));

  assessment.pn = probability_number(probability, cfg);
  std::string bracket_text;
  for (const auto& bracket : cfg.pn_limits) {
    if (probability <= bracket.upper_bound) {
      bracket_text = "p = " + core::format_double(probability) +
                     " <= " + core::format_double(bracket.upper_bound);
      break;
    }
  }
  assessment.rationale.push_back("probability: " + bracket_text + " -> PN " +
                                 std::to_string(assessment.pn));

  assessment.cn = criticality_number(assessment.sn, assessment.pn);
  assessment.level = criticality_level(assessment.sn, assessment.cn);
  assessment.rationale.push_back(
      "criticality: CN = " + std::to_string(assessment.sn) + " x " +
      std::to_string(assessment.pn) + " = " + std::to_string(assessment.cn) + " -> " +
      std::string(to_string(assessment.level)));
  return assessment;
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::Low: return "low";
    case Level::Medium: return "medium";
    case Level::High: return "high";
  }
  return "low";
}

std::optional<Level> level_from_string(std::string_view text) {
  if (text == "low") return Level::Low;
  if (text == "medium") return Level::Medium;
  if (text == "high") return Level::High;
  return std::nullopt;
}

}  // namespace dtriage::criticality
