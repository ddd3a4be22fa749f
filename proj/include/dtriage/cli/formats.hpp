#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dtriage/report/summary.hpp"
#include "dtriage/survival/kaplan_meier.hpp"

namespace dtriage::cli {

/// CSV <-> struct codecs for the files the pipeline stages exchange. All
/// writers are deterministic (fixed column order, shortest-round-trip
/// numbers); all readers throw Error("MissingHeader"/"UnparsableCell") on
/// malformed input.

// cospar_id,probability
std::map<catalog::CosparId, double> parse_probability_table(std::string_view bytes);

// cospar_id,age_years
std::map<catalog::CosparId, double> parse_age_table(std::string_view bytes);

// cospar_id,epoch,event — event is a breakup class (propulsion, anomalous,
// electrical, collision, unknown) or the reentry_unknown marker (epoch
// ignored for those).
std::vector<survival::RawEvent> parse_event_table(std::string_view bytes);

// time_years,survival,ci_low,ci_high,at_risk,events
std::string curve_csv(const survival::SurvivalCurve& curve);
survival::SurvivalCurve parse_curve_csv(std::string_view bytes);

// cospar_id,age_years,probability,sn,pn,cn,level
std::string assessment_csv(std::span<const report::AssessmentRow> rows);
std::vector<report::AssessmentRow> parse_assessment_csv(std::string_view bytes);

// One JSON object per line, full traces included.
std::string result_jsonl_line(const classifier::ClassificationResult& result);
std::vector<classifier::ClassificationResult> parse_result_jsonl(std::string_view bytes);

// cospar_id,matched — matched rule names pipe-joined, empty when unclassified.
std::string result_csv_header();
std::string result_csv_line(const classifier::ClassificationResult& result);

}  // namespace dtriage::cli
