#include "dtriage/classifier/rules.hpp"

#include <limits>

#include <json.hpp>

#include "dtriage/core/error.hpp"

namespace dtriage::classifier {

namespace {

using nlohmann::json;
using catalog::ObjectType;
using criticality::Level;

[[noreturn]] void schema_violation(const std::string& path, const std::string& why) {
  throw Error("SchemaViolation", path + ": " + why);
}

template <typename Enum, typename Parser>
std::set<Enum> parse_enum_set(const json& value, const std::string& path, Parser parse) {
  if (!value.is_array()) schema_violation(path, "expected an array");
  if (value.empty()) throw Error("EmptySlotSet", path + ": slot set must not be empty");
  std::set<Enum> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto& item = value[i];
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    if (!item.is_string()) schema_violation(item_path, "expected a string");
    const auto parsed = parse(item.get<std::string>());
    if (!parsed) schema_violation(item_path, "unknown value \"" + item.get<std::string>() + "\"");
    out.insert(*parsed);
  }
  return out;
}

bool parse_flag(const json& value, const std::string& path) {
  if (!value.is_boolean()) schema_violation(path, "expected a boolean");
  return value.get<bool>();
}

CaptureRule parse_rule(const json& value, const std::string& path) {
  if (!value.is_object()) schema_violation(path, "expected an object");

  CaptureRule rule;
  for (const auto& [key, slot] : value.items()) {
    const std::string slot_path = path + "." + key;
    if (key == "name") {
      if (!slot.is_string() || slot.get<std::string>().empty()) {
        schema_violation(slot_path, "expected a non-empty string");
      }
      rule.name = slot.get<std::string>();
    } else if (key == "object_type") {
      if (!slot.is_string()) schema_violation(slot_path, "expected \"PL\" or \"RB\"");
      const auto type = catalog::object_type_from_string(slot.get<std::string>());
      if (!type) schema_violation(slot_path, "unknown value \"" + slot.get<std::string>() + "\"");
      rule.object_type = std::set<ObjectType>{*type};
    } else if (key == "criticality") {
      rule.criticality = parse_enum_set<Level>(slot, slot_path, criticality::level_from_string);
    } else if (key == "passivated") {
      rule.passivated = parse_flag(slot, slot_path);
    } else if (key == "regimes") {
      rule.regimes = parse_enum_set<AttitudeRegime>(slot, slot_path, regime_from_string);
    } else if (key == "grapple_feature") {
      rule.grapple = parse_flag(slot, slot_path);
    } else if (key == "material") {
      rule.material = parse_enum_set<catalog::InterfaceMaterial>(slot, slot_path,
                                                                 catalog::material_from_string);
    } else if (key == "clearance") {
      rule.clearance = parse_enum_set<ClearanceClass>(slot, slot_path, clearance_from_string);
    } else {
      schema_violation(slot_path, "unknown rule key");
    }
  }
  if (rule.name.empty()) schema_violation(path, "rule has no name");
  return rule;
}

json parse_document(std::string_view bytes) {
  const json document = json::parse(bytes, nullptr, false);
  if (document.is_discarded() || !document.is_object()) {
    throw Error("SchemaViolation", "$: config is not a JSON object");
  }
  return document;
}

}  // namespace

std::vector<CaptureRule> default_rules() {
  const std::set<AttitudeRegime> up_to_medium = {
      AttitudeRegime::Stable, AttitudeRegime::SlowTumbling, AttitudeRegime::MediumTumbling};
  const std::set<AttitudeRegime> up_to_slow = {AttitudeRegime::Stable,
                                               AttitudeRegime::SlowTumbling};
  const std::set<AttitudeRegime> fast = {AttitudeRegime::FastTumbling};
  const std::set<Level> low = {Level::Low};
  const std::set<Level> low_medium = {Level::Low, Level::Medium};

  std::vector<CaptureRule> rules(8);
  rules[0].name = "Manipulator_Based";
  rules[0].criticality = low;
  rules[0].regimes = up_to_medium;
  rules[0].grapple = true;

  rules[1].name = "Clamp_Based";
  rules[1].object_type = {ObjectType::RocketBody};
  rules[1].criticality = low;
  rules[1].regimes = up_to_medium;
  rules[1].grapple = false;
  rules[1].clearance = {ClearanceClass::Broad};

  rules[2].name = "Net_Based";
  rules[2].criticality = low_medium;
  rules[2].regimes = up_to_medium;

  rules[3].name = "Harpoon_Based";
  rules[3].object_type = {ObjectType::Payload};
  rules[3].passivated = true;
  rules[3].regimes = up_to_slow;
  rules[3].grapple = false;
  rules[3].material = {catalog::InterfaceMaterial::Isotropic};

  rules[4].name = "Plume_Impingement";
  rules[4].object_type = {ObjectType::Payload};
  rules[4].criticality = low_medium;
  rules[4].regimes = fast;

  rules[5].name = "Electromagnetic_Based";
  rules[5].object_type = {ObjectType::RocketBody};
  rules[5].criticality = low_medium;
  rules[5].regimes = fast;

  rules[6].name = "Ablation_Based";
  rules[6].object_type = {ObjectType::Payload};
  rules[6].passivated = true;
  rules[6].regimes = fast;

  rules[7].name = "No_Solution";
  rules[7].criticality = {Level::High};
  rules[7].passivated = false;
  rules[7].regimes = fast;

  return rules;
}

std::vector<CaptureRule> load_rules(std::string_view bytes) {
  const json document = parse_document(bytes);
  const auto rules_node = document.find("rules");
  if (rules_node == document.end() || !rules_node->is_array()) {
    throw Error("SchemaViolation", "$.rules: missing or not an array");
  }

  std::vector<CaptureRule> rules;
  std::set<std::string> names;
  for (std::size_t i = 0; i < rules_node->size(); ++i) {
    auto rule = parse_rule((*rules_node)[i], "$.rules[" + std::to_string(i) + "]");
    if (!names.insert(rule.name).second) {
      throw Error("DuplicateRuleName", "rule \"" + rule.name + "\" defined twice");
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

catalog::ThresholdConfig load_thresholds(std::string_view bytes,
                                         const catalog::ThresholdConfig& base) {
  const json document = parse_document(bytes);
  const auto node = document.find("thresholds");
  if (node == document.end()) return base;
  if (!node->is_object()) throw Error("SchemaViolation", "$.thresholds: expected an object");

  catalog::ThresholdConfig cfg = base;
  const auto number_field = [&](const char* key, double& target) {
    const auto it = node->find(key);
    if (it == node->end()) return;
    if (!it->is_number()) {
      schema_violation(std::string("$.thresholds.") + key, "expected a number");
    }
    target = it->get<double>();
  };
  number_field("slow_max_deg_s", cfg.slow_max_deg_s);
  number_field("medium_max_deg_s", cfg.medium_max_deg_s);
  number_field("clearance_broad_min_m2", cfg.clearance_broad_min_m2);
  number_field("rb_fresh_age_years", cfg.rb_fresh_age_years);

  const auto int_field = [&](const char* key, int& target) {
    const auto it = node->find(key);
    if (it == node->end()) return;
    if (!it->is_number_integer()) {
      schema_violation(std::string("$.thresholds.") + key, "expected an integer");
    }
    target = it->get<int>();
  };
  int_field("aged_rb_fallback_sn", cfg.aged_rb_fallback_sn);
  int_field("no_propellant_sn", cfg.no_propellant_sn);

  if (const auto it = node->find("window_end"); it != node->end()) {
    if (!it->is_string()) schema_violation("$.thresholds.window_end", "expected a date string");
    const auto date = core::Date::parse(it->get<std::string>());
    if (!date) schema_violation("$.thresholds.window_end", "not a calendar date");
    cfg.window_end = *date;
  }

  if (const auto it = node->find("pn_limits"); it != node->end()) {
    if (!it->is_array()) schema_violation("$.thresholds.pn_limits", "expected an array");
    std::vector<catalog::PnBracket> limits;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& pair = (*it)[i];
      const std::string path = "$.thresholds.pn_limits[" + std::to_string(i) + "]";
      if (!pair.is_array() || pair.size() != 2) {
        schema_violation(path, "expected an [upper_bound, pn] pair");
      }
      double bound = std::numeric_limits<double>::infinity();
      if (!pair[0].is_null()) {
        if (!pair[0].is_number()) schema_violation(path + "[0]", "expected a number or null");
        bound = pair[0].get<double>();
      }
      if (!pair[1].is_number_integer()) schema_violation(path + "[1]", "expected an integer PN");
      limits.push_back({bound, pair[1].get<int>()});
    }
    cfg.pn_limits = std::move(limits);
  }

  cfg.validate();
  return cfg;
}

}  // namespace dtriage::classifier
