#include "dtriage/catalog/store.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "dtriage/catalog/validate.hpp"
#include "dtriage/core/error.hpp"
#include "dtriage/core/io.hpp"
#include "dtriage/core/text.hpp"

namespace dtriage::catalog {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_to_json(const DebrisObject& object) {
  const RawObject raw = to_raw(object);
  ordered_json record;
  for (const auto& key : object_field_order()) {
    const auto it = raw.find(key);
    if (it == raw.end()) {
      record[key] = nullptr;
      continue;
    }
    // Numeric and boolean fields keep their JSON types; everything else is text.
    if (key == "mass_kg" || key == "angular_rate_deg_s" || key == "interface_clearance_m2") {
      record[key] = *core::parse_double(it->second);
    } else if (key == "passivated" || key == "grapple_feature") {
      record[key] = (it->second == "true");
    } else {
      record[key] = it->second;
    }
  }
  return record;
}

RawObject json_to_raw(const ordered_json& record) {
  RawObject raw;
  for (const auto& [key, value] : record.items()) {
    if (value.is_null()) continue;
    if (value.is_string()) raw[key] = value.get<std::string>();
    else if (value.is_boolean()) raw[key] = value.get<bool>() ? "true" : "false";
    else if (value.is_number()) raw[key] = core::format_double(value.get<double>());
    else raw[key] = value.dump();
  }
  return raw;
}

[[noreturn]] void corrupt(std::size_t line, const std::string& why) {
  throw Error("CorruptRecord", "line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string serialize_store(std::span<const DebrisObject> objects) {
  std::vector<const DebrisObject*> sorted;
  sorted.reserve(objects.size());
  for (const auto& object : objects) sorted.push_back(&object);
  std::sort(sorted.begin(), sorted.end(), [](const DebrisObject* a, const DebrisObject* b) {
    return a->cospar_id < b->cospar_id;
  });

  std::string out;
  out.append(kStoreFormatVersion);
  out.push_back('\n');
  for (const auto* object : sorted) {
    out.append(record_to_json(*object).dump());
    out.push_back('\n');
  }
  return out;
}

std::vector<DebrisObject> parse_store(std::string_view bytes) {
  std::istringstream stream{std::string(bytes)};
  std::string line;
  std::size_t line_number = 0;

  if (!std::getline(stream, line)) corrupt(1, "missing header");
  ++line_number;
  if (core::trim(line) != kStoreFormatVersion) {
    corrupt(line_number, "unexpected header \"" + line + "\"");
  }

  std::vector<DebrisObject> objects;
  while (std::getline(stream, line)) {
    ++line_number;
    if (core::trim(line).empty()) corrupt(line_number, "blank record line");
    ordered_json record = ordered_json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      corrupt(line_number, "undecodable record");
    }
    auto result = validate_object(json_to_raw(record));
    if (!result.ok()) {
      corrupt(line_number, result.errors.front().message);
    }
    objects.push_back(std::move(*result.object));
  }
  return objects;
}

std::size_t store(std::span<const DebrisObject> objects, const std::filesystem::path& path) {
  core::write_file_atomic(path, serialize_store(objects));
  return objects.size();
}

std::vector<DebrisObject> load(const std::filesystem::path& path) {
  return parse_store(core::read_file(path));
}

}  // namespace dtriage::catalog
