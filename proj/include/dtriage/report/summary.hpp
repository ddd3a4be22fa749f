#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtriage/classifier/classify.hpp"

namespace dtriage::report {

/// One line of the assessment stage output; the report joins these with the
/// catalog and the classification results by cospar_id.
struct AssessmentRow {
  catalog::CosparId cospar_id;
  double age_years{0.0};
  double probability{0.0};
  int sn{1};
  int pn{1};
  int cn{1};
  criticality::Level level{criticality::Level::Low};
};

struct ClassSummaryRow {
  std::string capture_method;
  int count{0};
  // Medians over the objects matched to this class; empty when count is 0.
  std::optional<double> median_cn;
  std::optional<double> median_pn;
  std::optional<double> median_sn;
  std::optional<double> median_rate_deg_s;
  std::optional<double> median_age_years;
};

struct TypeDistributionRow {
  std::string capture_method;
  int payloads{0};
  int rocket_bodies{0};
};

struct CnDistributionRow {
  int cn{0};
  std::string capture_method;
  int count{0};
};

struct RegimeDistributionRow {
  std::string regime;
  std::string capture_method;
  int count{0};
};

/// Cohort-wide medians per object type, with interpercentile ranges.
struct CohortSummaryRow {
  std::string object_type;
  int count{0};
  double median_age_years{0.0};
  double age_lo{0.0};
  double age_hi{0.0};
  double median_probability{0.0};
  double probability_lo{0.0};
  double probability_hi{0.0};
};

struct SummaryReport {
  double lo_pct{25.0};
  double hi_pct{75.0};
  std::vector<ClassSummaryRow> per_class;               // rule-set order
  std::vector<TypeDistributionRow> by_object_type;      // rule-set order
  std::vector<CnDistributionRow> by_criticality_number; // CN ascending, then rule-set order
  std::vector<RegimeDistributionRow> by_attitude_regime;
  std::vector<CohortSummaryRow> cohorts;                // PL then RB, present types only
};

/// CN values the 4x4 matrix can produce; the histogram bins follow this set.
std::span<const int> criticality_number_bins();

/// Aggregates classification results into the per-class table (count and
/// medians), the three distribution breakdowns (object type, CN, attitude
/// regime), and per-object-type cohort medians with interpercentile ranges.
/// Multi-label objects count once per matched class, so counts can exceed the
/// number of objects. Throws Error("IdMismatch") when the three inputs do not
/// describe the same ids.
SummaryReport summarize(std::span<const catalog::DebrisObject> objects,
                        std::span<const AssessmentRow> assessments,
                        std::span<const classifier::ClassificationResult> results,
                        std::span<const std::string> class_names,
                        const catalog::ThresholdConfig& cfg, double lo_pct = 25.0,
                        double hi_pct = 75.0);

std::string class_summary_csv(const SummaryReport& report);
std::string object_type_csv(const SummaryReport& report);
std::string criticality_number_csv(const SummaryReport& report);
std::string attitude_regime_csv(const SummaryReport& report);
std::string cohort_summary_csv(const SummaryReport& report);

/// Aligned plain-text rendering of all five sections for terminal use.
std::string text_report(const SummaryReport& report);

std::string json_report(const SummaryReport& report);

}  // namespace dtriage::report
