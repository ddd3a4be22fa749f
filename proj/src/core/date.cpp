#include "dtriage/core/date.hpp"

#include <cctype>
#include <cstdio>

namespace dtriage::core {

namespace {

bool parse_digits(std::string_view text, std::size_t pos, std::size_t count, unsigned& out) {
  if (pos + count > text.size()) return false;
  unsigned value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + static_cast<unsigned>(c - '0');
  }
  out = value;
  return true;
}

}  // namespace

std::optional<Date> Date::parse(std::string_view text) {
  unsigned y = 0;
  unsigned m = 0;
  unsigned d = 1;
  if (text.size() == 7) {  // YYYY-MM
    if (!parse_digits(text, 0, 4, y) || text[4] != '-' || !parse_digits(text, 5, 2, m)) {
      return std::nullopt;
    }
  } else if (text.size() == 10) {  // YYYY-MM-DD
    if (!parse_digits(text, 0, 4, y) || text[4] != '-' || !parse_digits(text, 5, 2, m) ||
        text[7] != '-' || !parse_digits(text, 8, 2, d)) {
      return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  return from_ymd(static_cast<int>(y), m, d);
}

std::optional<Date> Date::from_ymd(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) return std::nullopt;
  return Date{year, month, day};
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year, month, day);
  return buf;
}

std::chrono::sys_days Date::to_sys_days() const {
  return std::chrono::sys_days{std::chrono::year_month_day{
      std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}}};
}

long days_between(const Date& from, const Date& to) {
  return (to.to_sys_days() - from.to_sys_days()).count();
}

}  // namespace dtriage::core
