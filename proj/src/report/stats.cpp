#include "dtriage/report/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dtriage/core/error.hpp"

namespace dtriage::report {

namespace {

double percentile_sorted(const std::vector<double>& sorted, double pct) {
  const double rank = pct / 100.0 * static_cast<double>(sorted.size() - 1);
  const auto below = static_cast<std::size_t>(std::floor(rank));
  const auto above = std::min(below + 1, sorted.size() - 1);
  const double fraction = rank - static_cast<double>(below);
  return sorted[below] + fraction * (sorted[above] - sorted[below]);
}

}  // namespace

double median(std::span<const double> values) {
  if (values.empty()) throw Error("EmptyInput", "median of an empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

std::pair<double, double> interpercentile(std::span<const double> values, double lo_pct,
                                          double hi_pct) {
  if (values.empty()) throw Error("EmptyInput", "percentiles of an empty list");
  if (!(lo_pct >= 0.0) || !(hi_pct <= 100.0) || !(lo_pct <= hi_pct)) {
    throw Error("OutOfRange", "percentiles must satisfy 0 <= lo <= hi <= 100");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return {percentile_sorted(sorted, lo_pct), percentile_sorted(sorted, hi_pct)};
}

}  // namespace dtriage::report
