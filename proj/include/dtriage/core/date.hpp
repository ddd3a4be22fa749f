#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace dtriage::core {

/// Calendar date with day precision (proleptic Gregorian).
///
/// Day precision is all the catalog needs: ages are reported in Julian years
/// of 365.25 days and the inputs carry dates, not timestamps.
struct Date {
  int year{1957};
  unsigned month{1};
  unsigned day{1};

  /// Accepts "YYYY-MM-DD" or "YYYY-MM" (day defaults to 01). Rejects
  /// impossible calendar dates such as 2001-02-29.
  static std::optional<Date> parse(std::string_view text);

  static std::optional<Date> from_ymd(int year, unsigned month, unsigned day);

  std::string to_string() const;  // "YYYY-MM-DD"

  std::chrono::sys_days to_sys_days() const;

  auto operator<=>(const Date&) const = default;
};

/// Signed day count from `from` to `to` (positive when `to` is later).
long days_between(const Date& from, const Date& to);

}  // namespace dtriage::core
