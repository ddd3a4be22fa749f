#include "dtriage/catalog/validate.hpp"

#include "dtriage/core/text.hpp"

namespace dtriage::catalog {

namespace {

class FieldReader {
 public:
  FieldReader(const RawObject& raw, std::vector<ValidationError>& errors)
      : raw_(raw), errors_(errors) {}

  std::optional<std::string> optional_text(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) return std::nullopt;
    const auto trimmed = core::trim(it->second);
    if (trimmed.empty()) return std::nullopt;
    return std::string(trimmed);
  }

  std::optional<std::string> required_text(const std::string& key) {
    auto value = optional_text(key);
    if (!value) {
      errors_.push_back({ValidationCode::MissingField, key, key + " is required"});
    }
    return value;
  }

  std::optional<core::Date> date(const std::string& key, bool required) {
    const auto text = required ? required_text(key) : optional_text(key);
    if (!text) return std::nullopt;
    auto parsed = core::Date::parse(*text);
    if (!parsed) {
      errors_.push_back(
          {ValidationCode::MalformedValue, key, key + ": not a calendar date: " + *text});
    }
    return parsed;
  }

  std::optional<double> number(const std::string& key, bool required) {
    const auto text = required ? required_text(key) : optional_text(key);
    if (!text) return std::nullopt;
    auto parsed = core::parse_double(*text);
    if (!parsed) {
      errors_.push_back(
          {ValidationCode::MalformedValue, key, key + ": not a finite number: " + *text});
    }
    return parsed;
  }

  std::optional<bool> boolean(const std::string& key, bool required) {
    const auto text = required ? required_text(key) : optional_text(key);
    if (!text) return std::nullopt;
    if (*text == "true") return true;
    if (*text == "false") return false;
    errors_.push_back({ValidationCode::UnknownEnumValue, key, key + ": expected true or false"});
    return std::nullopt;
  }

  void unknown_enum(const std::string& key, const std::string& value) {
    errors_.push_back(
        {ValidationCode::UnknownEnumValue, key, key + ": unknown value \"" + value + "\""});
  }

 private:
  const RawObject& raw_;
  std::vector<ValidationError>& errors_;
};

}  // namespace

ValidationResult validate_object(const RawObject& raw) {
  ValidationResult result;
  auto& errors = result.errors;
  FieldReader fields(raw, errors);

  std::optional<CosparId> id;
  if (const auto text = fields.required_text("cospar_id")) {
    id = CosparId::parse(*text);
    if (!id) {
      errors.push_back({ValidationCode::MalformedId, "cospar_id",
                        "cospar_id: malformed designator \"" + *text + "\""});
    }
  }

  std::optional<ObjectType> type;
  if (const auto text = fields.required_text("object_type")) {
    type = object_type_from_string(*text);
    if (!type) fields.unknown_enum("object_type", *text);
  }

  std::optional<OrbitClass> orbit;
  if (const auto text = fields.optional_text("orbit_class")) {
    orbit = orbit_class_from_string(*text);
    if (!orbit) fields.unknown_enum("orbit_class", *text);
  } else {
    errors.push_back({ValidationCode::MissingField, "orbit_class", "orbit_class is required"});
  }

  const auto launch = fields.date("launch_epoch", true);
  const auto reentry = fields.date("reentry_epoch", false);
  const auto deactivation = fields.date("deactivation_epoch", false);
  const auto failure = fields.date("failure_epoch", false);

  if (launch) {
    const auto check_order = [&](const char* key, const std::optional<core::Date>& epoch) {
      if (epoch && *epoch < *launch) {
        errors.push_back({ValidationCode::DateOrderViolation, key,
                          std::string(key) + " " + epoch->to_string() + " precedes launch " +
                              launch->to_string()});
      }
    };
    check_order("reentry_epoch", reentry);
    check_order("deactivation_epoch", deactivation);
    check_order("failure_epoch", failure);
  }

  bool passivated = false;
  if (const auto text = fields.optional_text("passivated")) {
    const auto tri = tri_state_from_string(*text);
    if (!tri) {
      fields.unknown_enum("passivated", *text);
    } else {
      passivated = (*tri == TriState::True);  // Unknown -> false
    }
  }

  auto propellant = PropellantClass::Unknown;
  if (const auto text = fields.optional_text("propellant")) {
    const auto parsed = propellant_from_string(*text);
    if (!parsed) fields.unknown_enum("propellant", *text);
    else propellant = *parsed;
  }

  const auto mass = fields.number("mass_kg", false);
  if (mass && !(*mass > 0.0)) {
    errors.push_back({ValidationCode::NegativeQuantity, "mass_kg",
                      "mass_kg must be positive, got " + core::format_double(*mass)});
  }

  const auto rate = fields.number("angular_rate_deg_s", true);
  if (rate && *rate < 0.0) {
    errors.push_back({ValidationCode::NegativeQuantity, "angular_rate_deg_s",
                      "angular_rate_deg_s must be non-negative, got " +
                          core::format_double(*rate)});
  }

  const auto grapple = fields.boolean("grapple_feature", true);

  auto material = InterfaceMaterial::Isotropic;
  if (const auto text = fields.required_text("interface_material")) {
    const auto parsed = material_from_string(*text);
    if (!parsed) fields.unknown_enum("interface_material", *text);
    else material = *parsed;
  }

  const auto clearance = fields.number("interface_clearance_m2", true);
  if (clearance && !(*clearance > 0.0)) {
    errors.push_back({ValidationCode::NegativeQuantity, "interface_clearance_m2",
                      "interface_clearance_m2 must be positive, got " +
                          core::format_double(*clearance)});
  }

  if (!errors.empty()) return result;

  DebrisObject object{*id};
  object.name = fields.optional_text("name").value_or("");
  object.object_type = *type;
  object.orbit_class = *orbit;
  object.launch_epoch = *launch;
  object.reentry_epoch = reentry;
  object.deactivation_epoch = deactivation;
  object.failure_epoch = failure;
  object.failure_kind = fields.optional_text("failure_kind");
  object.passivated = passivated;
  object.propellant = propellant;
  object.platform_name = fields.optional_text("platform_name").value_or("");
  object.mass_kg = mass;
  object.angular_rate_deg_s = *rate;
  object.grapple_feature = *grapple;
  object.interface_material = material;
  object.interface_clearance_m2 = *clearance;
  result.object = std::move(object);
  return result;
}

std::string_view to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::MalformedId: return "MalformedId";
    case ValidationCode::DateOrderViolation: return "DateOrderViolation";
    case ValidationCode::NegativeQuantity: return "NegativeQuantity";
    case ValidationCode::UnknownEnumValue: return "UnknownEnumValue";
    case ValidationCode::MissingField: return "MissingField";
    case ValidationCode::MalformedValue: return "MalformedValue";
  }
  return "MalformedValue";
}

const std::vector<std::string>& object_field_order() {
  static const std::vector<std::string> order = {
      "cospar_id",      "name",           "object_type",        "orbit_class",
      "launch_epoch",   "reentry_epoch",  "deactivation_epoch", "failure_epoch",
      "failure_kind",   "passivated",     "propellant",         "platform_name",
      "mass_kg",        "angular_rate_deg_s", "grapple_feature",
      "interface_material", "interface_clearance_m2",
  };
  return order;
}

RawObject to_raw(const DebrisObject& object) {
  RawObject raw;
  raw["cospar_id"] = object.cospar_id.value();
  if (!object.name.empty()) raw["name"] = object.name;
  raw["object_type"] = std::string(to_string(object.object_type));
  raw["orbit_class"] = std::string(to_string(object.orbit_class));
  raw["launch_epoch"] = object.launch_epoch.to_string();
  if (object.reentry_epoch) raw["reentry_epoch"] = object.reentry_epoch->to_string();
  if (object.deactivation_epoch) {
    raw["deactivation_epoch"] = object.deactivation_epoch->to_string();
  }
  if (object.failure_epoch) raw["failure_epoch"] = object.failure_epoch->to_string();
  if (object.failure_kind) raw["failure_kind"] = *object.failure_kind;
  raw["passivated"] = object.passivated ? "true" : "false";
  raw["propellant"] = std::string(to_string(object.propellant));
  if (!object.platform_name.empty()) raw["platform_name"] = object.platform_name;
  if (object.mass_kg) raw["mass_kg"] = core::format_double(*object.mass_kg);
  raw["angular_rate_deg_s"] = core::format_double(object.angular_rate_deg_s);
  raw["grapple_feature"] = object.grapple_feature ? "true" : "false";
  raw["interface_material"] = std::string(to_string(object.interface_material));
  raw["interface_clearance_m2"] = core::format_double(object.interface_clearance_m2);
  return raw;
}

}  // namespace dtriage::catalog
