#include "dtriage/cli/formats.hpp"

#include <json.hpp>

#include "dtriage/core/csv.hpp"
#include "dtriage/core/error.hpp"
#include "dtriage/core/text.hpp"

namespace dtriage::cli {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void unparsable(std::size_t row, const std::string& column, const std::string& why) {
  throw Error("UnparsableCell", "row " + std::to_string(row) + ", column " + column + ": " + why);
}

std::vector<std::vector<std::string>> rows_with_header(std::string_view bytes,
                                                       const std::vector<std::string>& header) {
  auto rows = core::parse_csv(bytes);
  if (rows.empty()) throw Error("MissingHeader", "input is empty");
  auto& first = rows.front();
  for (auto& cell : first) cell = std::string(core::trim(cell));
  if (first != header) {
    std::string expected;
    for (const auto& name : header) {
      if (!expected.empty()) expected += ",";
      expected += name;
    }
    throw Error("MissingHeader", "expected header \"" + expected + "\"");
  }
  return rows;
}

catalog::CosparId parse_id_cell(const std::string& text, std::size_t row) {
  const auto id = catalog::CosparId::parse(text);
  if (!id) unparsable(row, "cospar_id", "malformed designator \"" + text + "\"");
  return *id;
}

double parse_number_cell(const std::vector<std::string>& cells, std::size_t index,
                         const std::string& column, std::size_t row) {
  if (index >= cells.size()) unparsable(row, column, "missing cell");
  const auto value = core::parse_double(cells[index]);
  if (!value) unparsable(row, column, "not a finite number: \"" + cells[index] + "\"");
  return *value;
}

std::map<catalog::CosparId, double> parse_id_number_table(std::string_view bytes,
                                                          const std::string& value_column) {
  const auto rows = rows_with_header(bytes, {"cospar_id", value_column});
  std::map<catalog::CosparId, double> table;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto id = parse_id_cell(rows[r].empty() ? "" : rows[r][0], r + 1);
    const double value = parse_number_cell(rows[r], 1, value_column, r + 1);
    if (!table.emplace(id, value).second) {
      throw Error("DuplicateId", value_column + " table repeats " + id.value());
    }
  }
  return table;
}

}  // namespace

std::map<catalog::CosparId, double> parse_probability_table(std::string_view bytes) {
  return parse_id_number_table(bytes, "probability");
}

std::map<catalog::CosparId, double> parse_age_table(std::string_view bytes) {
  return parse_id_number_table(bytes, "age_years");
}

std::vector<survival::RawEvent> parse_event_table(std::string_view bytes) {
  const auto rows = rows_with_header(bytes, {"cospar_id", "epoch", "event"});
  std::vector<survival::RawEvent> events;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() < 3) unparsable(r + 1, "event", "missing cell");
    survival::RawEvent event{parse_id_cell(cells[0], r + 1)};
    const std::string kind{core::trim(cells[2])};
    if (kind != "reentry_unknown") {
      const auto breakup_class = survival::breakup_class_from_string(kind);
      if (!breakup_class) unparsable(r + 1, "event", "unknown event kind \"" + kind + "\"");
      event.breakup_class = breakup_class;
      const std::string epoch_text{core::trim(cells[1])};
      const auto epoch = core::Date::parse(epoch_text);
      if (!epoch) unparsable(r + 1, "epoch", "not a calendar date: \"" + epoch_text + "\"");
      event.epoch = epoch;
    }
    events.push_back(std::move(event));
  }
  return events;
}

std::string curve_csv(const survival::SurvivalCurve& curve) {
  std::string out = "time_years,survival,ci_low,ci_high,at_risk,events\n";
  for (const auto& step : curve.steps) {
    out += core::format_double(step.time_years) + "," + core::format_double(step.survival) + "," +
           core::format_double(step.ci_low) + "," + core::format_double(step.ci_high) + "," +
           std::to_string(step.at_risk) + "," + std::to_string(step.events) + "\n";
  }
  return out;
}

survival::SurvivalCurve parse_curve_csv(std::string_view bytes) {
  const auto rows =
      rows_with_header(bytes, {"time_years", "survival", "ci_low", "ci_high", "at_risk", "events"});
  survival::SurvivalCurve curve;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    survival::SurvivalStep step;
    step.time_years = parse_number_cell(rows[r], 0, "time_years", r + 1);
    step.survival = parse_number_cell(rows[r], 1, "survival", r + 1);
    step.ci_low = parse_number_cell(rows[r], 2, "ci_low", r + 1);
    step.ci_high = parse_number_cell(rows[r], 3, "ci_high", r + 1);
    step.at_risk = static_cast<int>(parse_number_cell(rows[r], 4, "at_risk", r + 1));
    step.events = static_cast<int>(parse_number_cell(rows[r], 5, "events", r + 1));
    curve.steps.push_back(step);
    curve.n_subjects = std::max(curve.n_subjects, step.at_risk);
  }
  return curve;
}

std::string assessment_csv(std::span<const report::AssessmentRow> rows) {
  std::string out = "cospar_id,age_years,probability,sn,pn,cn,level\n";
  for (const auto& row : rows) {
    out += row.cospar_id.value() + "," + core::format_double(row.age_years) + "," +
           core::format_double(row.probability) + "," + std::to_string(row.sn) + "," +
           std::to_string(row.pn) + "," + std::to_string(row.cn) + "," +
           std::string(criticality::to_string(row.level)) + "\n";
  }
  return out;
}

std::vector<report::AssessmentRow> parse_assessment_csv(std::string_view bytes) {
  const auto rows = rows_with_header(
      bytes, {"cospar_id", "age_years", "probability", "sn", "pn", "cn", "level"});
  std::vector<report::AssessmentRow> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() < 7) unparsable(r + 1, "level", "missing cell");
    report::AssessmentRow row{parse_id_cell(cells[0], r + 1)};
    row.age_years = parse_number_cell(cells, 1, "age_years", r + 1);
    row.probability = parse_number_cell(cells, 2, "probability", r + 1);
    row.sn = static_cast<int>(parse_number_cell(cells, 3, "sn", r + 1));
    row.pn = static_cast<int>(parse_number_cell(cells, 4, "pn", r + 1));
    row.cn = static_cast<int>(parse_number_cell(cells, 5, "cn", r + 1));
    const auto level = criticality::level_from_string(core::trim(cells[6]));
    if (!level) unparsable(r + 1, "level", "unknown level \"" + cells[6] + "\"");
    row.level = *level;
    out.push_back(std::move(row));
  }
  return out;
}

std::string result_jsonl_line(const classifier::ClassificationResult& result) {
  ordered_json line;
  line["cospar_id"] = result.cospar_id.value();
  line["matched"] = result.matched;
  auto& traces = line["traces"] = ordered_json::array();
  for (const auto& trace : result.traces) {
    ordered_json rule;
    rule["rule"] = trace.rule_name;
    rule["matched"] = trace.matched;
    auto& slots = rule["slots"] = ordered_json::array();
    for (const auto& slot : trace.slots) {
      slots.push_back({{"slot", slot.slot},
                       {"required", slot.required},
                       {"actual", slot.actual},
                       {"satisfied", slot.satisfied}});
    }
    traces.push_back(std::move(rule));
  }
  return line.dump() + "\n";
}

std::vector<classifier::ClassificationResult> parse_result_jsonl(std::string_view bytes) {
  std::vector<classifier::ClassificationResult> results;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start < bytes.size()) {
    auto end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    const auto line = core::trim(bytes.substr(start, end - start));
    start = end + 1;
    ++line_number;
    if (line.empty()) continue;

    const ordered_json record = ordered_json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object() || !record.contains("cospar_id") ||
        !record["cospar_id"].is_string()) {
      throw Error("CorruptRecord", "line " + std::to_string(line_number) +
                                       ": undecodable classification result");
    }
    const auto id = catalog::CosparId::parse(record["cospar_id"].get<std::string>());
    if (!id) {
      throw Error("CorruptRecord",
                  "line " + std::to_string(line_number) + ": malformed cospar_id");
    }
    classifier::ClassificationResult result{*id};
    if (record.contains("matched") && record["matched"].is_array()) {
      for (const auto& name : record["matched"]) {
        if (name.is_string()) result.matched.push_back(name.get<std::string>());
      }
    }
    if (record.contains("traces") && record["traces"].is_array()) {
      for (const auto& trace_node : record["traces"]) {
        classifier::RuleTrace trace;
        trace.rule_name = trace_node.value("rule", "");
        trace.matched = trace_node.value("matched", false);
        if (trace_node.contains("slots") && trace_node["slots"].is_array()) {
          for (const auto& slot_node : trace_node["slots"]) {
            trace.slots.push_back({slot_node.value("slot", ""), slot_node.value("required", ""),
                                   slot_node.value("actual", ""),
                                   slot_node.value("satisfied", false)});
          }
        }
        result.traces.push_back(std::move(trace));
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::string result_csv_header() { return "cospar_id,matched\n"; }

std::string result_csv_line(const classifier::ClassificationResult& result) {
  std::string matched;
  for (std::size_t i = 0; i < result.matched.size(); ++i) {
    if (i > 0) matched += "|";
    matched += result.matched[i];
  }
  return result.cospar_id.value() + "," + core::csv_escape(matched) + "\n";
}

}  // namespace dtriage::cli
