#pragma once

#include <span>
#include <utility>

namespace dtriage::report {

/// Middle element for odd n, mean of the two middle elements for even n.
/// Throws Error("EmptyInput").
double median(std::span<const double> values);

/// (lo, hi) percentiles by linear interpolation between closest ranks
/// (rank h = p/100 * (n-1) on the sorted values). Throws Error("EmptyInput")
/// or Error("OutOfRange") for percentiles outside [0, 100].
std::pair<double, double> interpercentile(std::span<const double> values, double lo_pct,
                                          double hi_pct);

}  // namespace dtriage::report
