#include "dtriage/catalog/types.hpp"

#include <cctype>
#include <chrono>
#include <limits>

#include "dtriage/core/error.hpp"
#include "dtriage/core/text.hpp"

namespace dtriage::catalog {

namespace {

int current_year() {
  using namespace std::chrono;
  const year_month_day today{floor<days>(system_clock::now())};
  return static_cast<int>(today.year());
}

bool all_digits(std::string_view text) {
  for (const char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return !text.empty();
}

}  // namespace

std::optional<CosparId> CosparId::parse(std::string_view raw) {
  const auto text = core::trim(raw);
  // YYYY-NNNP with 1 to 3 trailing uppercase letters.
  if (text.size() < 9 || text.size() > 11) return std::nullopt;
  if (text[4] != '-') return std::nullopt;
  const auto year_part = text.substr(0, 4);
  const auto launch_part = text.substr(5, 3);
  const auto piece_part = text.substr(8);
  if (!all_digits(year_part) || !all_digits(launch_part)) return std::nullopt;
  if (piece_part.empty() || piece_part.size() > 3) return std::nullopt;
  for (const char c : piece_part) {
    if (c < 'A' || c > 'Z') return std::nullopt;
  }
  const int year = (year_part[0] - '0') * 1000 + (year_part[1] - '0') * 100 +
                   (year_part[2] - '0') * 10 + (year_part[3] - '0');
  if (year < 1957 || year > current_year()) return std::nullopt;
  return CosparId(std::string(text));
}

int CosparId::launch_year() const {
  return (value_[0] - '0') * 1000 + (value_[1] - '0') * 100 + (value_[2] - '0') * 10 +
         (value_[3] - '0');
}

std::vector<PnBracket> default_pn_limits() {
  return {
      {1e-4, 1},
      {1e-2, 2},
      {1e-1, 3},
      {std::numeric_limits<double>::infinity(), 4},
  };
}

void ThresholdConfig::validate() const {
  if (!(slow_max_deg_s > 0.0) || !(medium_max_deg_s > slow_max_deg_s)) {
    throw Error("InvalidThresholds", "need 0 < slow_max_deg_s < medium_max_deg_s");
  }
  if (!(clearance_broad_min_m2 > 0.0)) {
    throw Error("InvalidThresholds", "clearance_broad_min_m2 must be positive");
  }
  if (!(rb_fresh_age_years > 0.0)) {
    throw Error("InvalidThresholds", "rb_fresh_age_years must be positive");
  }
  if (pn_limits.empty()) {
    throw Error("InvalidThresholds", "pn_limits must not be empty");
  }
  for (std::size_t i = 0; i < pn_limits.size(); ++i) {
    if (i > 0 && !(pn_limits[i].upper_bound > pn_limits[i - 1].upper_bound)) {
      throw Error("InvalidThresholds", "pn_limits upper bounds must be strictly increasing");
    }
    if (i > 0 && !(pn_limits[i].pn > pn_limits[i - 1].pn)) {
      throw Error("InvalidThresholds", "pn_limits PN values must be strictly increasing");
    }
  }
  if (pn_limits.back().upper_bound != std::numeric_limits<double>::infinity()) {
    throw Error("InvalidThresholds", "last pn_limits bound must be +infinity");
  }
  if (aged_rb_fallback_sn < 1 || aged_rb_fallback_sn > 4 || no_propellant_sn < 1 ||
      no_propellant_sn > 4) {
    throw Error("InvalidThresholds", "severity fallbacks must lie in [1, 4]");
  }
}

double orbit_age_years(const core::Date& launch_epoch, const core::Date& epoch) {
  const long days = core::days_between(launch_epoch, epoch);
  if (days < 0) {
    throw Error("NegativeAge", "epoch " + epoch.to_string() + " precedes launch " +
                                   launch_epoch.to_string());
  }
  return static_cast<double>(days) / 365.25;
}

std::string_view to_string(ObjectType type) {
  return type == ObjectType::Payload ? "PL" : "RB";
}

std::string_view to_string(OrbitClass orbit) {
  switch (orbit) {
    case OrbitClass::Leo: return "LEO";
    case OrbitClass::Meo: return "MEO";
    case OrbitClass::Geo: return "GEO";
    case OrbitClass::Gto: return "GTO";
    case OrbitClass::Heo: return "HEO";
  }
  return "LEO";
}

std::string_view to_string(PropellantClass propellant) {
  switch (propellant) {
    case PropellantClass::Cryogenic: return "cryogenic";
    case PropellantClass::Hypergolic: return "hypergolic";
    case PropellantClass::Petroleum: return "petroleum";
    case PropellantClass::Solid: return "solid";
    case PropellantClass::Hybrid: return "hybrid";
    case PropellantClass::NoPropellant: return "no_propellant";
    case PropellantClass::Other: return "other";
    case PropellantClass::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(InterfaceMaterial material) {
  return material == InterfaceMaterial::Isotropic ? "isotropic" : "anisotropic";
}

std::optional<ObjectType> object_type_from_string(std::string_view text) {
  if (text == "PL") return ObjectType::Payload;
  if (text == "RB") return ObjectType::RocketBody;
  return std::nullopt;
}

std::optional<OrbitClass> orbit_class_from_string(std::string_view text) {
  if (text == "LEO") return OrbitClass::Leo;
  if (text == "MEO") return OrbitClass::Meo;
  if (text == "GEO") return OrbitClass::Geo;
  if (text == "GTO") return OrbitClass::Gto;
  if (text == "HEO") return OrbitClass::Heo;
  return std::nullopt;
}

std::optional<PropellantClass> propellant_from_string(std::string_view text) {
  if (text == "cryogenic") return PropellantClass::Cryogenic;
  if (text == "hypergolic") return PropellantClass::Hypergolic;
  if (text == "petroleum") return PropellantClass::Petroleum;
  if (text == "solid") return PropellantClass::Solid;
  if (text == "hybrid") return PropellantClass::Hybrid;
  if (text == "no_propellant" || text == "none") return PropellantClass::NoPropellant;
  if (text == "other") return PropellantClass::Other;
  if (text == "unknown") return PropellantClass::Unknown;
  return std::nullopt;
}

std::optional<InterfaceMaterial> material_from_string(std::string_view text) {
  if (text == "isotropic") return InterfaceMaterial::Isotropic;
  if (text == "anisotropic") return InterfaceMaterial::Anisotropic;
  return std::nullopt;
}

std::optional<TriState> tri_state_from_string(std::string_view text) {
  if (text == "true") return TriState::True;
  if (text == "false") return TriState::False;
  if (text == "unknown") return TriState::Unknown;
  return std::nullopt;
}

}  // namespace dtriage::catalog
