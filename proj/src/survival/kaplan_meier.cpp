#include "dtriage/survival/kaplan_meier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dtriage/core/error.hpp"
#include "dtriage/survival/normal.hpp"

namespace dtriage::survival {

SurvivalCurve kaplan_meier(std::span<const EventRecord> records) {
  if (records.empty()) {
    throw Error("EmptyInput", "cannot estimate a survival curve from zero subjects");
  }
  std::set<catalog::CosparId> seen;
  for (const auto& record : records) {
    if (!seen.insert(record.subject_id).second) {
      throw Error("DuplicateSubject",
                  "subject " + record.subject_id.value() + " appears more than once");
    }
    if (!(record.time_years >= 0.0) || !std::isfinite(record.time_years)) {
      throw Error("OutOfRange", "event time must be finite and non-negative");
    }
  }

  // Group by time: breakup count and total departures per distinct time.
  std::map<double, std::pair<int, int>> by_time;  // time -> {breakups, departures}
  for (const auto& record : records) {
    auto& [breakups, departures] = by_time[record.time_years];
    if (record.kind.is_breakup()) ++breakups;
    ++departures;
  }

  SurvivalCurve curve;
  curve.n_subjects = static_cast<int>(records.size());
  int at_risk = curve.n_subjects;

  // The running product is kept as integer numerator/denominator products,
  // which stay exactly representable in a double up to 2^53 and telescope to
  // the empirical fraction when nothing is censored. Folding into `base` only
  // happens when the products would lose exactness, so small cohorts see a
  // single correctly-rounded division.
  constexpr double kExactLimit = 4503599627370496.0;  // 2^52
  double base = 1.0;
  double numerator = 1.0;
  double denominator = 1.0;
  for (const auto& [time, counts] : by_time) {
    const auto [breakups, departures] = counts;
    if (breakups > 0) {
      // Censorings tied with this time have not been removed yet, so at_risk
      // still includes them: events before censorings.
      if (denominator > kExactLimit / static_cast<double>(at_risk)) {
        base *= numerator / denominator;
        numerator = 1.0;
        denominator = 1.0;
      }
      numerator *= static_cast<double>(at_risk - breakups);
      denominator *= static_cast<double>(at_risk);
      const double survival = base * (numerator / denominator);
      curve.steps.push_back({time, survival, survival, survival, at_risk, breakups});
    }
    at_risk -= departures;
  }
  return curve;
}

SurvivalCurve greenwood_ci(const SurvivalCurve& curve, double alpha, CiMethod method) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) {
    throw Error("OutOfRange", "alpha must lie in (0, 1]");
  }
  const double z = normal_quantile(1.0 - alpha / 2.0);

  SurvivalCurve banded = curve;
  double variance_sum = 0.0;
  bool risk_exhausted = false;
  for (auto& step : banded.steps) {
    if (step.events == step.at_risk) risk_exhausted = true;
    if (risk_exhausted) {
      step.ci_low = 0.0;
      step.ci_high = step.survival;
      continue;
    }
    variance_sum += static_cast<double>(step.events) /
                    (static_cast<double>(step.at_risk) *
                     static_cast<double>(step.at_risk - step.events));
    const double variance = step.survival * step.survival * variance_sum;
    if (method == CiMethod::Plain) {
      const double half_width = z * std::sqrt(variance);
      step.ci_low = std::max(0.0, step.survival - half_width);
      step.ci_high = std::min(1.0, step.survival + half_width);
    } else {
      // S in (0, 1) here: S = 1 never reaches a step and S = 0 only via an
      // exhausted risk set, handled above.
      const double sigma = std::sqrt(variance) / (step.survival * std::log(step.survival));
      const double theta = std::exp(z * std::abs(sigma));
      step.ci_low = std::pow(step.survival, theta);
      step.ci_high = std::pow(step.survival, 1.0 / theta);
    }
  }
  return banded;
}

double survival_at(const SurvivalCurve& curve, double age_years) {
  double survival = 1.0;
  for (const auto& step : curve.steps) {
    if (step.time_years > age_years) break;
    survival = step.survival;
  }
  return survival;
}

double breakup_probability(const SurvivalCurve& curve, double age_years) {
  if (!(age_years >= 0.0) || !std::isfinite(age_years)) {
    throw Error("OutOfRange", "age must be finite and non-negative");
  }
  return 1.0 - survival_at(curve, age_years);
}

}  // namespace dtriage::survival
