#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtriage/catalog/types.hpp"

namespace dtriage::criticality {

enum class Level { Low, Medium, High };

struct SeverityResult {
  int sn{1};
  std::string rationale;
};

/// Full criticality verdict. cn is always sn * pn; rationale records the
/// matched severity row and probability bracket so the verdict is auditable.
struct CriticalityAssessment {
  int sn{1};
  int pn{1};
  int cn{1};
  Level level{Level::Low};
  std::vector<std::string> rationale;
};

/// Severity number of the worst credible fragmentation event.
///
/// Payloads are SN 2 regardless of passivation (their worst anomalous /
/// electrical events shed similar fragment counts). Rocket bodies:
///   passivated                              -> 1 (anomalous worst case)
///   non-passivated, age <= rb_fresh_age     -> 4 (any propellant)
///   non-passivated, older: hypergolic -> 3, cryogenic -> 2,
///     petroleum or solid -> 1, no propellant -> cfg.no_propellant_sn,
///     hybrid/other/unknown -> cfg.aged_rb_fallback_sn (conservative default).
SeverityResult severity_number(const catalog::DebrisObject& object, double age_years,
                               const catalog::ThresholdConfig& cfg);

/// Smallest PN whose bracket upper bound is >= p (bounds inclusive):
/// p <= 1e-4 -> 1, p <= 1e-2 -> 2, p <= 1e-1 -> 3, above -> 4 with the
/// shipped brackets. Throws Error("OutOfRange") outside [0, 1].
int probability_number(double p, const catalog::ThresholdConfig& cfg);

/// CN = SN * PN, the criticality-matrix cell. Throws Error("OutOfRange")
/// unless both inputs lie in [1, 4].
int criticality_number(int sn, int pn);

/// High when SN = 4 or CN >= 8 (the High triggers outrank everything),
/// Medium when CN = 6, Low otherwise (CN <= 4 or negligible severity).
Level criticality_level(int sn, int cn);

/// severity_number + probability_number + criticality_number + level in one
/// call, with the full rationale trail.
CriticalityAssessment assess(const catalog::DebrisObject& object, double probability,
                             double age_years, const catalog::ThresholdConfig& cfg);

std::string_view to_string(Level level);
std::optional<Level> level_from_string(std::string_view text);

}  // namespace dtriage::criticality
