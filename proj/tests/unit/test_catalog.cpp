#include <doctest.h>

#include <algorithm>
#include <random>

#include "dtriage/catalog/validate.hpp"
#include "dtriage/core/error.hpp"
#include "support/helpers.hpp"

using namespace dtriage;
using catalog::CosparId;
using catalog::RawObject;
using catalog::ValidationCode;
using catalog::validate_object;

namespace {

RawObject valid_raw() {
  return {
      {"cospar_id", "1978-018B"},
      {"name", "DELTA 1 R/B"},
      {"object_type", "RB"},
      {"orbit_class", "LEO"},
      {"launch_epoch", "1978-03-05"},
      {"passivated", "false"},
      {"propellant", "petroleum"},
      {"platform_name", "Delta 2910"},
      {"angular_rate_deg_s", "67.8"},
      {"grapple_feature", "true"},
      {"interface_material", "isotropic"},
      {"interface_clearance_m2", "0.2827"},
  };
}

bool has_code(const catalog::ValidationResult& result, ValidationCode code) {
  return std::any_of(result.errors.begin(), result.errors.end(),
                     [code](const auto& error) { return error.code == code; });
}

}  // namespace

TEST_CASE("cospar id pattern") {
  CHECK(CosparId::parse("1978-018B").has_value());
  CHECK(CosparId::parse("2014-037A").has_value());
  CHECK(CosparId::parse("1998-067AGB").has_value());  // three-letter piece
  CHECK(CosparId::parse("  1978-018B \n").has_value());  // trimmed

  CHECK_FALSE(CosparId::parse("1978-18B").has_value());
  CHECK_FALSE(CosparId::parse("1978-018b").has_value());
  CHECK_FALSE(CosparId::parse("1978-018").has_value());
  CHECK_FALSE(CosparId::parse("1978-0181").has_value());
  CHECK_FALSE(CosparId::parse("1956-001A").has_value());  // before 1957
  CHECK_FALSE(CosparId::parse("9999-001A").has_value());  // future year
  CHECK_FALSE(CosparId::parse("1978-018ABCD").has_value());

  CHECK(CosparId::parse("1978-018B")->value() == "1978-018B");
  CHECK(CosparId::parse("1978-018B")->launch_year() == 1978);
  CHECK(*CosparId::parse(" 1978-018B") == *CosparId::parse("1978-018B"));
}

TEST_CASE("validate_object accepts a fixture-shaped record") {
  const auto result = validate_object(valid_raw());
  REQUIRE(result.ok());
  CHECK(result.errors.empty());
  const auto& object = *result.object;
  CHECK(object.cospar_id.value() == "1978-018B");
  CHECK(object.object_type == catalog::ObjectType::RocketBody);
  CHECK(object.angular_rate_deg_s == 67.8);
  CHECK_FALSE(object.passivated);
  CHECK_FALSE(object.mass_kg.has_value());
}

TEST_CASE("validate_object reports the complete violation list") {
  auto raw = valid_raw();
  raw["cospar_id"] = "1978-18B";
  raw["reentry_epoch"] = "1970-01-01";  // precedes launch
  raw["mass_kg"] = "-5";
  raw["propellant"] = "antimatter";

  const auto result = validate_object(raw);
  REQUIRE_FALSE(result.ok());
  CHECK(result.errors.size() == 4);
  CHECK(has_code(result, ValidationCode::MalformedId));
  CHECK(has_code(result, ValidationCode::DateOrderViolation));
  CHECK(has_code(result, ValidationCode::NegativeQuantity));
  CHECK(has_code(result, ValidationCode::UnknownEnumValue));
}

TEST_CASE("validate_object named error cases") {
  SUBCASE("malformed id") {
    auto raw = valid_raw();
    raw["cospar_id"] = "1978-18B";
    CHECK(has_code(validate_object(raw), ValidationCode::MalformedId));
  }
  SUBCASE("date order") {
    auto raw = valid_raw();
    raw["launch_epoch"] = "2000-01-01";
    raw["reentry_epoch"] = "1999-01-01";
    CHECK(has_code(validate_object(raw), ValidationCode::DateOrderViolation));
  }
  SUBCASE("negative rate") {
    auto raw = valid_raw();
    raw["angular_rate_deg_s"] = "-1";
    CHECK(has_code(validate_object(raw), ValidationCode::NegativeQuantity));
  }
  SUBCASE("zero clearance") {
    auto raw = valid_raw();
    raw["interface_clearance_m2"] = "0";
    CHECK(has_code(validate_object(raw), ValidationCode::NegativeQuantity));
  }
  SUBCASE("unknown enum") {
    auto raw = valid_raw();
    raw["orbit_class"] = "XEO";
    CHECK(has_code(validate_object(raw), ValidationCode::UnknownEnumValue));
  }
  SUBCASE("missing required field") {
    auto raw = valid_raw();
    raw.erase("launch_epoch");
    CHECK(has_code(validate_object(raw), ValidationCode::MissingField));
  }
}

TEST_CASE("passivation tri-state collapses unknown to false") {
  auto raw = valid_raw();
  raw["passivated"] = "unknown";
  const auto collapsed = validate_object(raw);
  REQUIRE(collapsed.ok());
  CHECK_FALSE(collapsed.object->passivated);

  raw["passivated"] = "true";  // curated explicit flag; no further support needed
  const auto documented = validate_object(raw);
  REQUIRE(documented.ok());
  CHECK(documented.object->passivated);
}

TEST_CASE("validation totality: object xor errors, never both or neither") {
  // Fuzz raw maps built from a pool of good and bad field values.
  std::mt19937 rng(20190731);
  const std::vector<std::pair<std::string, std::vector<std::string>>> pool = {
      {"cospar_id", {"1978-018B", "1978-18B", "garbage", ""}},
      {"object_type", {"RB", "PL", "Rocket Body", ""}},
      {"orbit_class", {"LEO", "GTO", "XEO", ""}},
      {"launch_epoch", {"1978-03-05", "2000-13-01", "soon", ""}},
      {"reentry_epoch", {"2019-01-01", "1901-01-01", "later", ""}},
      {"passivated", {"true", "false", "unknown", "maybe", ""}},
      {"propellant", {"hypergolic", "antimatter", ""}},
      {"mass_kg", {"900", "-1", "heavy", ""}},
      {"angular_rate_deg_s", {"0", "67.8", "-3", "fast", ""}},
      {"grapple_feature", {"true", "false", "yes", ""}},
      {"interface_material", {"isotropic", "anisotropic", "wood", ""}},
      {"interface_clearance_m2", {"0.2827", "0", "-1", "wide", ""}},
  };
  for (int i = 0; i < 500; ++i) {
    RawObject raw;
    for (const auto& [key, values] : pool) {
      const auto& value = values[rng() % values.size()];
      if (!value.empty()) raw[key] = value;
    }
    const auto result = validate_object(raw);
    CHECK(result.object.has_value() != !result.errors.empty());
  }
}

TEST_CASE("threshold config invariants") {
  catalog::ThresholdConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  SUBCASE("slow >= medium") {
    cfg.slow_max_deg_s = 20.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
  }
  SUBCASE("non-increasing pn bounds") {
    cfg.pn_limits[1].upper_bound = 1e-5;
    CHECK_THROWS_AS(cfg.validate(), Error);
  }
  SUBCASE("last bound must be infinite") {
    cfg.pn_limits.back().upper_bound = 0.5;
    CHECK_THROWS_AS(cfg.validate(), Error);
  }
  SUBCASE("negative clearance threshold") {
    cfg.clearance_broad_min_m2 = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
  }
}
