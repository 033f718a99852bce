#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logknee/timestamp.hpp"

namespace logknee {

// An attribute we do not interpret. Only concept:name and time:timestamp
// carry semantics for this pipeline; everything else rides along as
// opaque (element, key, value) text so that logs survive a round trip.
struct XesAttribute {
  std::string element;  // xes element name: string, date, int, float, boolean, id
  std::string key;
  std::string value;

  bool operator==(const XesAttribute&) const = default;
};

struct Event {
  std::string case_id;
  std::string activity;
  std::optional<Timestamp> timestamp;
  std::uint64_t ordinal = 0;  // position within the source file, unique per log
  std::vector<XesAttribute> extras;
};

struct Trace {
  std::string case_id;
  std::vector<Event> events;
  std::vector<XesAttribute> extras;
};

struct EventLog {
  std::vector<Trace> traces;
  std::string source_name;
  std::uint64_t total_events = 0;

  // Recomputes total_events from the traces. Call after direct mutation.
  void refresh_totals();
};

// Global ordering policy for building the event sequence the prefixes
// are cut from.
enum class OrderPolicy {
  ByTimestamp,  // stable sort by (timestamp, ordinal)
  ByOrdinal,    // pure file order, for timestamp-free logs
};

struct LogStats {
  std::uint64_t trace_count = 0;
  std::uint64_t event_count = 0;
  std::set<std::string> activities;
  std::map<std::string, std::uint64_t> activity_frequencies;
  std::optional<Timestamp> min_timestamp;
  std::optional<Timestamp> max_timestamp;
};

struct ReductionSchedule {
  std::vector<std::uint64_t> ks;  // strictly increasing, every k >= 1
  bool include_full = true;

  // {5, 10, 20, 50, 100, 1000, 10000, 100000} plus the full log.
  static ReductionSchedule default_schedule();
};

// The full time-ordered event sequence of the log. ByTimestamp requires
// every event to carry a timestamp and breaks ties by file ordinal, so
// the result is a deterministic permutation of the log's events.
std::vector<Event> global_order(const EventLog& log, OrderPolicy policy = OrderPolicy::ByTimestamp);

// The sub-log holding exactly the first k events of global_order(log),
// regrouped into (possibly partial) traces that keep the original
// in-trace event order. Traces contributing no events are absent.
// Throws KOutOfRangeError unless 1 <= k <= total_events.
EventLog prefix_sublog(const EventLog& log, std::uint64_t k, OrderPolicy policy = OrderPolicy::ByTimestamp);

LogStats summarize(const EventLog& log);

// Invariant check used by tests and `ingest`; returns human-readable
// violations, empty when the log is well formed.
std::vector<std::string> validate(const EventLog& log);

}  // namespace logknee
