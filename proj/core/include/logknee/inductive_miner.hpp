#pragma once

#include "logknee/event_log.hpp"
#include "logknee/process_tree.hpp"

namespace logknee {

// Base inductive miner: recursively detects exclusive-choice, sequence,
// parallel and loop cuts on the directly-follows graph, and falls back
// to the flower model LOOP(tau, XOR(a1..am)) when no cut applies. The
// fall-through makes discovery total, and every trace of the input log
// replays perfectly on the net of the resulting tree.
//
// Deterministic: activities, components and children are always handled
// in lexicographic label order.
ProcessTree discover_inductive(const EventLog& log);

}  // namespace logknee
