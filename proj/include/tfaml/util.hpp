#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tfaml {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the CSV readers; the message always names the offending file
// and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what) {}
};

using Day = std::chrono::sys_days;

// Half-open-by-count horizon: days [start, start + days).
struct DateRange {
  Day start{};
  int days = 0;

  bool contains(Day d) const {
    const auto i = (d - start).count();
    return i >= 0 && i < days;
  }
  // Index of d within the horizon; caller must check contains() first.
  int index_of(Day d) const { return static_cast<int>((d - start).count()); }
  Day end() const { return start + std::chrono::days(days); }
};

// --- small string / number helpers -----------------------------------------

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (true) {
    const size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

inline bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

inline bool parse_int(std::string_view s, long long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// Shortest round-trip decimal form; locale independent.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

// Fixed two-decimal form for currency amounts.
inline std::string format_amount(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof(buf), "%.2f", v);
  return std::string(buf, buf + n);
}

// --- calendar dates ----------------------------------------------------------

// Strict YYYY-MM-DD. Returns false on anything else (including invalid
// calendar dates such as 2019-02-30).
inline bool parse_date(std::string_view s, Day& out) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  long long y = 0, m = 0, d = 0;
  if (!parse_int(s.substr(0, 4), y)) return false;
  if (!parse_int(s.substr(5, 2), m)) return false;
  if (!parse_int(s.substr(8, 2), d)) return false;
  const std::chrono::year_month_day ymd{
      std::chrono::year(static_cast<int>(y)),
      std::chrono::month(static_cast<unsigned>(m)),
      std::chrono::day(static_cast<unsigned>(d))};
  if (!ymd.ok()) return false;
  out = Day(ymd);
  return true;
}

inline std::string date_to_string(Day d) {
  const std::chrono::year_month_day ymd(d);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return std::string(buf);
}

}  // namespace tfaml
