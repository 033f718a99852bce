#include "logknee/event_log.hpp"

#include <algorithm>
#include <unordered_set>

#include "logknee/errors.hpp"

namespace logknee {

void EventLog::refresh_totals() {
  total_events = 0;
  for (const auto& trace : traces) total_events += trace.events.size();
}

ReductionSchedule ReductionSchedule::default_schedule() {
  return {{5, 10, 20, 50, 100, 1000, 10000, 100000}, true};
}

std::vector<Event> global_order(const EventLog& log, OrderPolicy policy) {
  std::vector<Event> events;
  events.reserve(log.total_events);
  for (const auto& trace : log.traces) {
    for (const auto& event : trace.events) events.push_back(event);
  }
  if (policy == OrderPolicy::ByTimestamp) {
    for (const auto& event : events) {
      if (!event.timestamp) {
        throw MissingTimestampError("event '" + event.activity + "' (ordinal " +
                                    std::to_string(event.ordinal) +
                                    ") has no timestamp; use file ordering for timestamp-free logs");
      }
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      if (*a.timestamp != *b.timestamp) return *a.timestamp < *b.timestamp;
      return a.ordinal < b.ordinal;
    });
  } else {
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.ordinal < b.ordinal; });
  }
  return events;
}

EventLog prefix_sublog(const EventLog& log, std::uint64_t k, OrderPolicy policy) {
  if (k < 1 || k > log.total_events) {
    throw KOutOfRangeError("k=" + std::to_string(k) + " outside [1, " +
                           std::to_string(log.total_events) + "]");
  }
  std::vector<Event> ordered = global_order(log, policy);
  std::unordered_set<std::uint64_t> selected;
  selected.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) selected.insert(ordered[i].ordinal);

  EventLog result;
  result.source_name = log.source_name;
  for (const auto& trace : log.traces) {
    Trace cut;
    cut.case_id = trace.case_id;
    cut.extras = trace.extras;
    for (const auto& event : trace.events) {
      if (selected.count(event.ordinal)) cut.events.push_back(event);
    }
    if (!cut.events.empty()) result.traces.push_back(std::move(cut));
  }
  result.refresh_totals();
  return result;
}

LogStats summarize(const EventLog& log) {
  LogStats stats;
  stats.trace_count = log.traces.size();
  for (const auto& trace : log.traces) {
    for (const auto& event : trace.events) {
      ++stats.event_count;
      stats.activities.insert(event.activity);
      ++stats.activity_frequencies[event.activity];
      if (event.timestamp) {
        if (!stats.min_timestamp || *event.timestamp < *stats.min_timestamp)
          stats.min_timestamp = event.timestamp;
        if (!stats.max_timestamp || *stats.max_timestamp < *event.timestamp)
          stats.max_timestamp = event.timestamp;
      }
    }
  }
  return stats;
}

std::vector<std::string> validate(const EventLog& log) {
  std::vector<std::string> problems;
  std::uint64_t counted = 0;
  std::unordered_set<std::string> case_ids;
  std::unordered_set<std::uint64_t> ordinals;
  for (const auto& trace : log.traces) {
    if (!case_ids.insert(trace.case_id).second)
      problems.push_back("duplicate case id: " + trace.case_id);
    const Event* prev = nullptr;
    for (const auto& event : trace.events) {
      ++counted;
      if (event.activity.empty())
        problems.push_back("empty activity at ordinal " + std::to_string(event.ordinal));
      if (event.case_id != trace.case_id)
        problems.push_back("event ordinal " + std::to_string(event.ordinal) +
                           " carries case id '" + event.case_id + "' inside trace '" +
                           trace.case_id + "'");
      if (!ordinals.insert(event.ordinal).second)
        problems.push_back("duplicate ordinal " + std::to_string(event.ordinal));
      if (prev && prev->timestamp && event.timestamp && *event.timestamp < *prev->timestamp)
        problems.push_back("timestamps decrease inside trace '" + trace.case_id +
                           "' at ordinal " + std::to_string(event.ordinal));
      prev = &event;
    }
  }
  if (counted != log.total_events)
    problems.push_back("total_events=" + std::to_string(log.total_events) + " but traces hold " +
                       std::to_string(counted));
  return problems;
}

}  // namespace logknee
