#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace logknee {

// An absolute UTC instant with microsecond resolution. Timestamps are
// normalized to UTC when parsed; the original zone offset is not kept,
// since cross-trace ordering must be zone independent.
struct Timestamp {
  std::int64_t micros = 0;  // microseconds since the Unix epoch

  auto operator<=>(const Timestamp&) const = default;
};

// Parses an ISO-8601 date-time such as
//   2021-03-01T09:30:00.250+01:00
//   2021-03-01T08:30:00.250Z
// Fractional seconds beyond microseconds are truncated. Returns nullopt
// on anything that does not look like a date-time.
std::optional<Timestamp> parse_iso8601(std::string_view text);

// Formats as UTC with a +00:00 suffix. Millisecond precision unless the
// value carries sub-millisecond digits, in which case six digits are
// emitted so that format/parse round-trips exactly.
std::string format_iso8601(Timestamp ts);

}  // namespace logknee
