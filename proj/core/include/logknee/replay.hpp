#pragma once

#include <cstdint>

#include "logknee/event_log.hpp"
#include "logknee/petri_net.hpp"

namespace logknee {

// Token-based replay outcome. Counters include the initial production
// and the final consumption; fits is what matters downstream:
// fits == (missing == 0 && remaining == 0) after reaching the final
// marking.
struct ReplayResult {
  bool fits = false;
  std::uint64_t consumed = 0;
  std::uint64_t produced = 0;
  std::uint64_t missing = 0;
  std::uint64_t remaining = 0;
};

// Replays the trace from the initial marking. Labeled transitions fire
// in trace order; silent transitions are fired greedily through a
// bounded breadth-first search (depth = number of silent transitions in
// the net, markings deduplicated) to enable the next labeled transition
// or to reach the final marking. When a required input place is empty
// the token is counted missing and synthesized.
//
// Throws UnknownActivityError when the trace mentions a label the net
// has no transition for. This is a validation oracle, not an
// alignment-optimal conformance checker.
ReplayResult replay(const PetriNet& net, const Trace& trace);

}  // namespace logknee
