#include "dtriage/report/summary.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dtriage/classifier/profile.hpp"
#include "dtriage/core/error.hpp"
#include "dtriage/core/text.hpp"
#include "dtriage/report/stats.hpp"

namespace dtriage::report {

namespace {

constexpr std::array<int, 9> kCnBins = {1, 2, 3, 4, 6, 8, 9, 12, 16};

constexpr std::array<classifier::AttitudeRegime, 4> kRegimes = {
    classifier::AttitudeRegime::Stable,
    classifier::AttitudeRegime::SlowTumbling,
    classifier::AttitudeRegime::MediumTumbling,
    classifier::AttitudeRegime::FastTumbling,
};

std::string opt_text(const std::optional<double>& value) {
  return value ? core::format_double(*value) : "";
}

struct JoinedObject {
  const catalog::DebrisObject* object;
  const AssessmentRow* assessment;
  const classifier::ClassificationResult* result;
  classifier::AttitudeRegime regime;
};

}  // namespace

std::span<const int> criticality_number_bins() { return kCnBins; }

SummaryReport summarize(std::span<const catalog::DebrisObject> objects,
                        std::span<const AssessmentRow> assessments,
                        std::span<const classifier::ClassificationResult> results,
                        std::span<const std::string> class_names,
                        const catalog::ThresholdConfig& cfg, double lo_pct, double hi_pct) {
  std::map<catalog::CosparId, JoinedObject> joined;
  for (const auto& object : objects) {
    joined.emplace(object.cospar_id, JoinedObject{&object, nullptr, nullptr, {}});
  }
  const auto join = [&](const catalog::CosparId& id, auto setter, const char* side) {
    const auto it = joined.find(id);
    if (it == joined.end()) {
      throw Error("IdMismatch", std::string(side) + " references unknown object " + id.value());
    }
    setter(it->second);
  };
  for (const auto& row : assessments) {
    join(row.cospar_id, [&](JoinedObject& j) { j.assessment = &row; }, "assessment");
  }
  for (const auto& result : results) {
    join(result.cospar_id, [&](JoinedObject& j) { j.result = &result; }, "result");
  }
  for (auto& [id, j] : joined) {
    if (!j.assessment || !j.result) {
      throw Error("IdMismatch", id.value() + " lacks an assessment or classification result");
    }
    j.regime = classifier::attitude_regime(j.object->angular_rate_deg_s, cfg);
  }

  SummaryReport report;
  report.lo_pct = lo_pct;
  report.hi_pct = hi_pct;

  for (const auto& name : class_names) {
    ClassSummaryRow class_row{name};
    TypeDistributionRow type_row{name};
    std::vector<double> cns, pns, sns, rates, ages;
    std::map<int, int> cn_counts;
    std::map<classifier::AttitudeRegime, int> regime_counts;

    for (const auto& [id, j] : joined) {
      const auto& matched = j.result->matched;
      if (std::find(matched.begin(), matched.end(), name) == matched.end()) continue;
      ++class_row.count;
      cns.push_back(j.assessment->cn);
      pns.push_back(j.assessment->pn);
      sns.push_back(j.assessment->sn);
      rates.push_back(j.object->angular_rate_deg_s);
      ages.push_back(j.assessment->age_years);
      if (j.object->object_type == catalog::ObjectType::Payload) ++type_row.payloads;
      else ++type_row.rocket_bodies;
      ++cn_counts[j.assessment->cn];
      ++regime_counts[j.regime];
    }
    if (class_row.count > 0) {
      class_row.median_cn = median(cns);
      class_row.median_pn = median(pns);
      class_row.median_sn = median(sns);
      class_row.median_rate_deg_s = median(rates);
      class_row.median_age_years = median(ages);
    }
    report.per_class.push_back(std::move(class_row));
    report.by_object_type.push_back(type_row);
    for (const int cn : kCnBins) {
      report.by_criticality_number.push_back({cn, name, cn_counts[cn]});
    }
    for (const auto regime : kRegimes) {
      report.by_attitude_regime.push_back(
          {std::string(classifier::to_string(regime)), name, regime_counts[regime]});
    }
  }

  // CN rows grouped by bin first, classes within; built class-first above.
  std::stable_sort(report.by_criticality_number.begin(), report.by_criticality_number.end(),
                   [](const CnDistributionRow& a, const CnDistributionRow& b) {
                     return a.cn < b.cn;
                   });

  for (const auto type : {catalog::ObjectType::Payload, catalog::ObjectType::RocketBody}) {
    std::vector<double> ages, probabilities;
    for (const auto& [id, j] : joined) {
      if (j.object->object_type != type) continue;
      ages.push_back(j.assessment->age_years);
      probabilities.push_back(j.assessment->probability);
    }
    if (ages.empty()) continue;
    CohortSummaryRow row{std::string(catalog::to_string(type)), static_cast<int>(ages.size())};
    row.median_age_years = median(ages);
    std::tie(row.age_lo, row.age_hi) = interpercentile(ages, lo_pct, hi_pct);
    row.median_probability = median(probabilities);
    std::tie(row.probability_lo, row.probability_hi) =
        interpercentile(probabilities, lo_pct, hi_pct);
    report.cohorts.push_back(std::move(row));
  }
  return report;
}

std::string class_summary_csv(const SummaryReport& report) {
  std::string out =
      "capture_method,count,median_cn,median_pn,median_sn,median_rate_deg_s,median_age_years\n";
  for (const auto& row : report.per_class) {
    out += core::csv_escape(row.capture_method) + "," + std::to_string(row.count) + "," +
           opt_text(row.median_cn) + "," + opt_text(row.median_pn) + "," +
           opt_text(row.median_sn) + "," + opt_text(row.median_rate_deg_s) + "," +
           opt_text(row.median_age_years) + "\n";
  }
  return out;
}

std::string object_type_csv(const SummaryReport& report) {
  std::string out = "capture_method,payloads,rocket_bodies\n";
  for (const auto& row : report.by_object_type) {
    out += core::csv_escape(row.capture_method) + "," + std::to_string(row.payloads) + "," +
           std::to_string(row.rocket_bodies) + "\n";
  }
  return out;
}

std::string criticality_number_csv(const SummaryReport& report) {
  std::string out = "cn,capture_method,count\n";
  for (const auto& row : report.by_criticality_number) {
    out += std::to_string(row.cn) + "," + core::csv_escape(row.capture_method) + "," +
           std::to_string(row.count) + "\n";
  }
  return out;
}

std::string attitude_regime_csv(const SummaryReport& report) {
  std::string out = "regime,capture_method,count\n";
  for (const auto& row : report.by_attitude_regime) {
    out += row.regime + "," + core::csv_escape(row.capture_method) + "," +
           std::to_string(row.count) + "\n";
  }
  return out;
}

std::string cohort_summary_csv(const SummaryReport& report) {
  const std::string lo = core::format_double(report.lo_pct);
  const std::string hi = core::format_double(report.hi_pct);
  std::string out = "object_type,count,median_age_years,age_p" + lo + ",age_p" + hi +
                    ",median_probability,probability_p" + lo + ",probability_p" + hi + "\n";
  for (const auto& row : report.cohorts) {
    out += row.object_type + "," + std::to_string(row.count) + "," +
           core::format_double(row.median_age_years) + "," + core::format_double(row.age_lo) +
           "," + core::format_double(row.age_hi) + "," +
           core::format_double(row.median_probability) + "," +
           core::format_double(row.probability_lo) + "," +
           core::format_double(row.probability_hi) + "\n";
  }
  return out;
}

namespace {

// Text tables are for reading, not parsing: 6 significant digits.
std::string short_text(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string short_opt_text(const std::optional<double>& value) {
  return value ? short_text(*value) : "";
}

void append_table(std::string& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) out.append(widths[i] - row[i].size() + 2, ' ');
    }
    out += "\n";
  }
}

}  // namespace

std::string text_report(const SummaryReport& report) {
  std::string out;
  out += "capture method summary (medians; interpercentile " +
         core::format_double(report.lo_pct) + "-" + core::format_double(report.hi_pct) + ")\n";
  std::vector<std::vector<std::string>> rows = {
      {"class", "count", "CN", "PN", "SN", "rate deg/s", "age years"}};
  for (const auto& row : report.per_class) {
    rows.push_back({row.capture_method, std::to_string(row.count), short_opt_text(row.median_cn),
                    short_opt_text(row.median_pn), short_opt_text(row.median_sn),
                    short_opt_text(row.median_rate_deg_s),
                    short_opt_text(row.median_age_years)});
  }
  append_table(out, rows);

  out += "\nby object type\n";
  rows = {{"class", "PL", "RB"}};
  for (const auto& row : report.by_object_type) {
    rows.push_back(
        {row.capture_method, std::to_string(row.payloads), std::to_string(row.rocket_bodies)});
  }
  append_table(out, rows);

  out += "\nby criticality number (nonzero)\n";
  rows = {{"CN", "class", "count"}};
  for (const auto& row : report.by_criticality_number) {
    if (row.count == 0) continue;
    rows.push_back({std::to_string(row.cn), row.capture_method, std::to_string(row.count)});
  }
  append_table(out, rows);

  out += "\nby attitude regime (nonzero)\n";
  rows = {{"regime", "class", "count"}};
  for (const auto& row : report.by_attitude_regime) {
    if (row.count == 0) continue;
    rows.push_back({row.regime, row.capture_method, std::to_string(row.count)});
  }
  append_table(out, rows);

  out += "\ncohorts\n";
  rows = {{"type", "count", "median age", "age range", "median p", "p range"}};
  for (const auto& row : report.cohorts) {
    rows.push_back({row.object_type, std::to_string(row.count),
                    short_text(row.median_age_years),
                    short_text(row.age_lo) + "-" + short_text(row.age_hi),
                    short_text(row.median_probability),
                    short_text(row.probability_lo) + "-" + short_text(row.probability_hi)});
  }
  append_table(out, rows);
  return out;
}

std::string json_report(const SummaryReport& report) {
  nlohmann::ordered_json doc;
  doc["interpercentile"] = {report.lo_pct, report.hi_pct};
  auto& per_class = doc["per_class"] = nlohmann::ordered_json::array();
  for (const auto& row : report.per_class) {
    nlohmann::ordered_json item;
    item["capture_method"] = row.capture_method;
    item["count"] = row.count;
    const auto set = [&item](const char* key, const std::optional<double>& value) {
      if (value) item[key] = *value;
      else item[key] = nullptr;
    };
    set("median_cn", row.median_cn);
    set("median_pn", row.median_pn);
    set("median_sn", row.median_sn);
    set("median_rate_deg_s", row.median_rate_deg_s);
    set("median_age_years", row.median_age_years);
    per_class.push_back(std::move(item));
  }
  auto& by_type = doc["by_object_type"] = nlohmann::ordered_json::array();
  for (const auto& row : report.by_object_type) {
    by_type.push_back({{"capture_method", row.capture_method},
                       {"payloads", row.payloads},
                       {"rocket_bodies", row.rocket_bodies}});
  }
  auto& by_cn = doc["by_criticality_number"] = nlohmann::ordered_json::array();
  for (const auto& row : report.by_criticality_number) {
    by_cn.push_back({{"cn", row.cn}, {"capture_method", row.capture_method},
                     {"count", row.count}});
  }
  auto& by_regime = doc["by_attitude_regime"] = nlohmann::ordered_json::array();
  for (const auto& row : report.by_attitude_regime) {
    by_regime.push_back({{"regime", row.regime}, {"capture_method", row.capture_method},
                         {"count", row.count}});
  }
  auto& cohorts = doc["cohorts"] = nlohmann::ordered_json::array();
  for (const auto& row : report.cohorts) {
    cohorts.push_back({{"object_type", row.object_type},
                       {"count", row.count},
                       {"median_age_years", row.median_age_years},
                       {"age_lo", row.age_lo},
                       {"age_hi", row.age_hi},
                       {"median_probability", row.median_probability},
                       {"probability_lo", row.probability_lo},
                       {"probability_hi", row.probability_hi}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace dtriage::report
