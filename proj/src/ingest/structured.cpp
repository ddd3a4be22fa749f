#include "dtriage/ingest/structured.hpp"

#include <json.hpp>

#include "dtriage/core/error.hpp"

namespace dtriage::ingest {

namespace {

using nlohmann::json;

std::string at(std::size_t index, const char* attribute) {
  return "data[" + std::to_string(index) + "].attributes." + attribute;
}

std::optional<std::string> text_attribute(const json& attributes, const char* key) {
  const auto it = attributes.find(key);
  if (it == attributes.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

std::optional<catalog::ObjectType> map_object_class(std::string_view text) {
  if (text == "Payload") return catalog::ObjectType::Payload;
  if (text == "Rocket Body") return catalog::ObjectType::RocketBody;
  return std::nullopt;
}

}  // namespace

StructuredDocument parse_structured_document(std::string_view bytes) {
  const json document = json::parse(bytes, nullptr, false);
  if (document.is_discarded() || !document.is_object()) {
    throw Error("MalformedDocument", "input is not a JSON object");
  }
  if (const auto jsonapi = document.find("jsonapi"); jsonapi != document.end()) {
    if (jsonapi->is_object()) {
      const auto version = jsonapi->find("version");
      if (version != jsonapi->end() && version->is_string() &&
          version->get<std::string>() != "1.0") {
        throw Error("UnsupportedVersion",
                    "unsupported document version " + version->get<std::string>());
      }
    }
  }
  const auto data = document.find("data");
  if (data == document.end() || !data->is_array()) {
    throw Error("MalformedDocument", "top-level `data` array is missing");
  }

  StructuredDocument result;
  if (const auto links = document.find("links"); links != document.end() && links->is_object()) {
    const auto next = links->find("next");
    if (next != links->end() && next->is_string()) {
      result.next_link = next->get<std::string>();
    }
  }

  for (std::size_t i = 0; i < data->size(); ++i) {
    const json& resource = (*data)[i];
    if (!resource.is_object() || !resource.contains("attributes") ||
        !resource["attributes"].is_object()) {
      result.diagnostics.push_back(
          {"data[" + std::to_string(i) + "]", "resource has no attributes object"});
      continue;
    }
    const json& attributes = resource["attributes"];

    const auto id_text = text_attribute(attributes, "cosparId");
    if (!id_text) {
      result.diagnostics.push_back({at(i, "cosparId"), "cosparId is missing"});
      continue;
    }
    const auto id = catalog::CosparId::parse(*id_text);
    if (!id) {
      result.diagnostics.push_back({at(i, "cosparId"), "malformed designator \"" + *id_text + "\""});
      continue;
    }

    const auto class_text = text_attribute(attributes, "objectClass");
    if (!class_text) {
      result.diagnostics.push_back({at(i, "objectClass"), "objectClass is missing"});
      continue;
    }
    const auto type = map_object_class(*class_text);
    if (!type) {
      result.diagnostics.push_back(
          {at(i, "objectClass"), "unmapped object class \"" + *class_text + "\""});
      continue;
    }

    const auto launch_text = text_attribute(attributes, "launchEpoch");
    const auto launch = launch_text ? core::Date::parse(*launch_text) : std::nullopt;
    if (!launch) {
      result.diagnostics.push_back({at(i, "launchEpoch"), "launchEpoch missing or unparsable"});
      continue;
    }

    const auto orbit_text = text_attribute(attributes, "orbitClass");
    const auto orbit = orbit_text ? catalog::orbit_class_from_string(*orbit_text) : std::nullopt;
    if (!orbit) {
      result.diagnostics.push_back({at(i, "orbitClass"), "orbitClass missing or unknown"});
      continue;
    }

    StructuredRecord record{*id};
    record.name = text_attribute(attributes, "name").value_or("");
    record.object_type = *type;
    record.launch_epoch = *launch;
    record.orbit_class = *orbit;

    if (const auto reentry_text = text_attribute(attributes, "reentryEpoch")) {
      const auto reentry = core::Date::parse(*reentry_text);
      if (!reentry) {
        result.diagnostics.push_back({at(i, "reentryEpoch"), "unparsable date, field dropped"});
      } else {
        record.reentry_epoch = reentry;
      }
    }
    if (const auto mass = attributes.find("mass");
        mass != attributes.end() && mass->is_number()) {
      record.mass_kg = mass->get<double>();
    }
    record.dimensions = text_attribute(attributes, "dimensions");
    record.launcher_name = text_attribute(attributes, "launcherName");
    record.country = text_attribute(attributes, "country");
    result.records.push_back(std::move(record));
  }
  return result;
}

}  // namespace dtriage::ingest
