#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "logknee/event_log.hpp"

namespace logknee {

// Directly-follows graph: edge (a, b) counts how often b immediately
// follows a within a trace. Start/end maps count first/last events.
struct DirectlyFollowsGraph {
  std::set<std::string> activities;
  std::map<std::pair<std::string, std::string>, std::uint64_t> edges;
  std::map<std::string, std::uint64_t> start_activities;
  std::map<std::string, std::uint64_t> end_activities;

  bool has_edge(const std::string& from, const std::string& to) const {
    return edges.count({from, to}) > 0;
  }
};

DirectlyFollowsGraph build_dfg(const EventLog& log);

}  // namespace logknee
