#include "logknee/timestamp.hpp"

#include <cctype>
#include <cstdio>

namespace logknee {

namespace {

constexpr std::int64_t kMicrosPerSecond = 1000000;
constexpr std::int64_t kSecondsPerDay = 86400;

// Days since 1970-01-01 from a proleptic Gregorian civil date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct CivilDate {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2), m, d};
}

bool read_digits(std::string_view s, std::size_t& pos, int count, std::int64_t& out) {
  std::int64_t v = 0;
  for (int i = 0; i < count; ++i) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    v = v * 10 + (s[pos] - '0');
    ++pos;
  }
  out = v;
  return true;
}

bool expect(std::string_view s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c) return false;
  ++pos;
  return true;
}

}  // namespace

std::optional<Timestamp> parse_iso8601(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  std::size_t pos = 0;
  std::int64_t year, month, day, hour, minute, second;
  if (!read_digits(text, pos, 4, year)) return std::nullopt;
  if (!expect(text, pos, '-')) return std::nullopt;
  if (!read_digits(text, pos, 2, month)) return std::nullopt;
  if (!expect(text, pos, '-')) return std::nullopt;
  if (!read_digits(text, pos, 2, day)) return std::nullopt;
  if (pos >= text.size() || (text[pos] != 'T' && text[pos] != 't' && text[pos] != ' ')) return std::nullopt;
  ++pos;
  if (!read_digits(text, pos, 2, hour)) return std::nullopt;
  if (!expect(text, pos, ':')) return std::nullopt;
  if (!read_digits(text, pos, 2, minute)) return std::nullopt;
  if (!expect(text, pos, ':')) return std::nullopt;
  if (!read_digits(text, pos, 2, second)) return std::nullopt;
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60) return std::nullopt;

  std::int64_t frac_micros = 0;
  if (pos < text.size() && (text[pos] == '.' || text[pos] == ',')) {
    ++pos;
    int digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (digits < 6) frac_micros = frac_micros * 10 + (text[pos] - '0');
      ++digits;
      ++pos;
    }
    if (digits == 0) return std::nullopt;
    for (; digits < 6; ++digits) frac_micros *= 10;
  }

  // Zone designator: Z, +HH:MM, +HHMM, +HH, or absent (treated as UTC).
  std::int64_t offset_seconds = 0;
  if (pos < text.size()) {
    char c = text[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      int sign = c == '+' ? 1 : -1;
      ++pos;
      std::int64_t oh = 0, om = 0;
      if (!read_digits(text, pos, 2, oh)) return std::nullopt;
      if (pos < text.size() && text[pos] == ':') {
        ++pos;
        if (!read_digits(text, pos, 2, om)) return std::nullopt;
      } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (!read_digits(text, pos, 2, om)) return std::nullopt;
      }
      offset_seconds = sign * (oh * 3600 + om * 60);
    } else {
      return std::nullopt;
    }
  }
  if (pos != text.size()) return std::nullopt;

  const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
  const std::int64_t seconds = days * kSecondsPerDay + hour * 3600 + minute * 60 + second - offset_seconds;
  return Timestamp{seconds * kMicrosPerSecond + frac_micros};
}

std::string format_iso8601(Timestamp ts) {
  std::int64_t micros = ts.micros;
  std::int64_t seconds = micros / kMicrosPerSecond;
  std::int64_t frac = micros % kMicrosPerSecond;
  if (frac < 0) {
    frac += kMicrosPerSecond;
    seconds -= 1;
  }
  std::int64_t days = seconds / kSecondsPerDay;
  std::int64_t sod = seconds % kSecondsPerDay;
  if (sod < 0) {
    sod += kSecondsPerDay;
    days -= 1;
  }
  const CivilDate date = civil_from_days(days);
  const int hour = static_cast<int>(sod / 3600);
  const int minute = static_cast<int>((sod % 3600) / 60);
  const int second = static_cast<int>(sod % 60);

  char buf[48];
  if (frac % 1000 == 0) {
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02d:%02d:%02d.%03lld+00:00",
                  static_cast<long long>(date.year), date.month, date.day, hour, minute, second,
                  static_cast<long long>(frac / 1000));
  } else {
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02d:%02d:%02d.%06lld+00:00",
                  static_cast<long long>(date.year), date.month, date.day, hour, minute, second,
                  static_cast<long long>(frac));
  }
  return buf;
}

}  // namespace logknee
