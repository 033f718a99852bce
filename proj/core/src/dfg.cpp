#include "logknee/dfg.hpp"

namespace logknee {

DirectlyFollowsGraph build_dfg(const EventLog& log) {
  DirectlyFollowsGraph dfg;
  for (const auto& trace : log.traces) {
    const auto& events = trace.events;
    for (const auto& event : events) dfg.activities.insert(event.activity);
    if (events.empty()) continue;
    ++dfg.start_activities[events.front().activity];
    ++dfg.end_activities[events.back().activity];
    for (std::size_t i = 1; i < events.size(); ++i) {
      ++dfg.edges[{events[i - 1].activity, events[i].activity}];
    }
  }
  return dfg;
}

}  // namespace logknee
