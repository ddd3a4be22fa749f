#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtriage/core/date.hpp"

namespace dtriage::catalog {

enum class ObjectType { Payload, RocketBody };

enum class OrbitClass { Leo, Meo, Geo, Gto, Heo };

/// Propellant of the main propulsion system of the object's platform.
/// Cryogenic/Hypergolic/Petroleum form the liquid subtree; Unknown is a
/// legitimate catalog value, not an input error — severity handling for it
/// is decided downstream.
enum class PropellantClass {
  Cryogenic,
  Hypergolic,
  Petroleum,
  Solid,
  Hybrid,
  NoPropellant,
  Other,
  Unknown,
};

enum class InterfaceMaterial { Isotropic, Anisotropic };

/// Raw passivation annotations are tri-state; Unknown collapses to false at
/// validation (a passivated state is trusted only when documented).
enum class TriState { True, False, Unknown };

/// International designator, e.g. "1978-018B": 4-digit year, 3-digit launch
/// number, 1-3 uppercase letters. Equality is byte equality of the stored
/// (whitespace-trimmed) text.
class CosparId {
 public:
  /// Trims surrounding whitespace, then validates the pattern and the year
  /// range [1957, current year]. Returns nullopt on any violation.
  static std::optional<CosparId> parse(std::string_view raw);

  const std::string& value() const noexcept { return value_; }
  int launch_year() const;

  auto operator<=>(const CosparId&) const = default;

 private:
  explicit CosparId(std::string value) : value_(std::move(value)) {}

  std::string value_;
};

/// One cataloged intact derelict object after validation. Immutable by
/// convention: validated objects are shared read-only across workers.
struct DebrisObject {
  CosparId cospar_id;
  std::string name;
  ObjectType object_type{ObjectType::Payload};
  OrbitClass orbit_class{OrbitClass::Leo};
  core::Date launch_epoch;
  std::optional<core::Date> reentry_epoch;
  std::optional<core::Date> deactivation_epoch;
  std::optional<core::Date> failure_epoch;
  std::optional<std::string> failure_kind;
  bool passivated{false};
  PropellantClass propellant{PropellantClass::Unknown};
  std::string platform_name;
  std::optional<double> mass_kg;
  double angular_rate_deg_s{0.0};  // magnitude of the angular velocity
  bool grapple_feature{false};
  InterfaceMaterial interface_material{InterfaceMaterial::Isotropic};
  double interface_clearance_m2{0.0};  // area centered on the capture interface

  bool operator==(const DebrisObject&) const = default;
};

/// One probability bracket of the criticality matrix: p values up to
/// `upper_bound` (inclusive) map to `pn`. The last bracket is open-ended
/// (upper_bound = +infinity).
struct PnBracket {
  double upper_bound;
  int pn;

  bool operator==(const PnBracket&) const = default;
};

std::vector<PnBracket> default_pn_limits();

/// Every tunable the characterization pipeline reads. Shipped values follow
/// the reference operating points; all of them are meant to be overridden
/// from config.
struct ThresholdConfig {
  double slow_max_deg_s{5.0};         // slow tumbling: 0 < w < 5 deg/s
  double medium_max_deg_s{18.0};      // medium tumbling: 5 <= w < 18 deg/s
  double clearance_broad_min_m2{0.28};
  double rb_fresh_age_years{1.05};    // propulsion events statistically worst below this age
  std::vector<PnBracket> pn_limits{default_pn_limits()};
  core::Date window_end{2019, 7, 31};

  // Severity rows the reference table leaves open, pinned here so the choice
  // is configurable and shows up in rationale text. Aged non-passivated
  // rocket bodies with hybrid/other/unknown propellant take the conservative
  // maximum of the aged rows; no propellant means nothing to fragment.
  int aged_rb_fallback_sn{3};
  int no_propellant_sn{1};

  /// Throws Error("InvalidThresholds") when the invariants do not hold:
  /// 0 < slow_max < medium_max, positive clearance and age thresholds,
  /// pn_limits with strictly increasing bounds and PN values ending at +inf.
  void validate() const;

  bool operator==(const ThresholdConfig&) const = default;
};

/// Orbit age in Julian years of 365.25 days.
/// Throws Error("NegativeAge") when epoch precedes launch.
double orbit_age_years(const core::Date& launch_epoch, const core::Date& epoch);

// Canonical enum spellings used by the persistence format and the CLI.
std::string_view to_string(ObjectType type);
std::string_view to_string(OrbitClass orbit);
std::string_view to_string(PropellantClass propellant);
std::string_view to_string(InterfaceMaterial material);

std::optional<ObjectType> object_type_from_string(std::string_view text);
std::optional<OrbitClass> orbit_class_from_string(std::string_view text);
std::optional<PropellantClass> propellant_from_string(std::string_view text);
std::optional<InterfaceMaterial> material_from_string(std::string_view text);
std::optional<TriState> tri_state_from_string(std::string_view text);

}  // namespace dtriage::catalog
