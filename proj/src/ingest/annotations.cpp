#include "dtriage/ingest/annotations.hpp"

#include <algorithm>
#include <map>

#include "dtriage/core/csv.hpp"
#include "dtriage/core/error.hpp"
#include "dtriage/core/text.hpp"

namespace dtriage::ingest {

namespace {

const std::vector<std::string>& expected_columns() {
  static const std::vector<std::string> columns = {
      "cospar_id",        "angular_rate_deg_s",     "passivated",
      "propellant_class", "platform_name",          "grapple_feature",
      "interface_material", "interface_clearance_m2", "failure_epoch",
      "failure_kind",
  };
  return columns;
}

[[noreturn]] void unparsable(std::size_t row, const std::string& column, const std::string& why) {
  throw Error("UnparsableCell", "row " + std::to_string(row) + ", column " + column + ": " + why);
}

class RowReader {
 public:
  RowReader(const std::vector<std::string>& cells, const std::map<std::string, std::size_t>& index,
            std::size_t row_number)
      : cells_(cells), index_(index), row_(row_number) {}

  std::string cell(const std::string& column) const {
    const auto position = index_.at(column);
    if (position >= cells_.size()) return "";
    return std::string(core::trim(cells_[position]));
  }

  double number(const std::string& column) const {
    const auto text = cell(column);
    const auto value = core::parse_double(text);
    if (!value) unparsable(row_, column, "not a finite number: \"" + text + "\"");
    return *value;
  }

  bool boolean(const std::string& column) const {
    const auto text = cell(column);
    if (text == "true") return true;
    if (text == "false") return false;
    unparsable(row_, column, "expected true or false, got \"" + text + "\"");
  }

  std::size_t row() const { return row_; }

 private:
  const std::vector<std::string>& cells_;
  const std::map<std::string, std::size_t>& index_;
  std::size_t row_;
};

}  // namespace

AnnotationTable parse_annotations(std::string_view bytes) {
  const auto rows = core::parse_csv(bytes);
  if (rows.empty()) {
    throw Error("MissingHeader", "annotation input is empty");
  }

  std::map<std::string, std::size_t> index;
  AnnotationTable table;
  const auto& header = rows.front();
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name{core::trim(header[i])};
    const auto& expected = expected_columns();
    if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
      table.diagnostics.push_back({"header[" + std::to_string(i) + "]",
                                   "unknown column \"" + name + "\" ignored"});
      continue;
    }
    if (!index.emplace(name, i).second) {
      throw Error("MissingHeader", "duplicate column \"" + name + "\"");
    }
  }
  for (const auto& column : expected_columns()) {
    if (!index.contains(column)) {
      throw Error("MissingColumn", "missing column \"" + column + "\"");
    }
  }

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const RowReader reader(rows[r], index, r + 1);  // 1-based, header is row 1

    const auto id_text = reader.cell("cospar_id");
    const auto id = catalog::CosparId::parse(id_text);
    if (!id) unparsable(reader.row(), "cospar_id", "malformed designator \"" + id_text + "\"");

    AnnotationRecord record{*id};
    record.angular_rate_deg_s = reader.number("angular_rate_deg_s");

    const auto passivated_text = reader.cell("passivated");
    const auto passivated = catalog::tri_state_from_string(passivated_text);
    if (!passivated) {
      unparsable(reader.row(), "passivated",
                 "expected true/false/unknown, got \"" + passivated_text + "\"");
    }
    record.passivated = *passivated;

    const auto propellant_text = reader.cell("propellant_class");
    const auto propellant = catalog::propellant_from_string(propellant_text);
    if (!propellant) {
      unparsable(reader.row(), "propellant_class", "unknown class \"" + propellant_text + "\"");
    }
    record.propellant = *propellant;

    record.platform_name = reader.cell("platform_name");
    record.grapple_feature = reader.boolean("grapple_feature");

    const auto material_text = reader.cell("interface_material");
    const auto material = catalog::material_from_string(material_text);
    if (!material) {
      unparsable(reader.row(), "interface_material",
                 "expected isotropic or anisotropic, got \"" + material_text + "\"");
    }
    record.interface_material = *material;
    record.interface_clearance_m2 = reader.number("interface_clearance_m2");

    if (const auto failure_text = reader.cell("failure_epoch"); !failure_text.empty()) {
      const auto failure = core::Date::parse(failure_text);
      if (!failure) {
        unparsable(reader.row(), "failure_epoch", "not a calendar date: \"" + failure_text + "\"");
      }
      record.failure_epoch = failure;
    }
    if (const auto kind = reader.cell("failure_kind"); !kind.empty()) {
      record.failure_kind = kind;
    }
    table.records.push_back(std::move(record));
  }
  return table;
}

}  // namespace dtriage::ingest
