#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logknee/process_tree.hpp"

namespace logknee {

// A labeled or silent transition. Silent transitions carry a stable
// rendering name tau_<index> assigned at construction.
struct Transition {
  int id = 0;
  std::optional<std::string> label;  // nullopt = silent

  bool silent() const { return !label.has_value(); }
};

struct Arc {
  bool place_to_transition = true;
  int place = 0;
  int transition = 0;

  bool operator==(const Arc&) const = default;
};

// Workflow-shaped Petri net: place 0 is the source, place 1 the sink.
struct PetriNet {
  int place_count = 0;
  std::vector<Transition> transitions;
  std::vector<Arc> arcs;
  std::map<int, int> initial_marking;  // place -> token count
  std::map<int, int> final_marking;

  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  // Name a transition renders under: its label, or tau_<i> for the i-th
  // silent transition in id order.
  std::string transition_name(int id) const;

  std::vector<std::string> visible_alphabet() const;  // sorted, unique
  std::size_t silent_count() const;
};

// Structural recursion over the tree: sequence chains children through
// shared places, exclusive shares entry/exit, parallel forks and joins
// through silent transitions, loop wires the redo part from the do
// part's exit back to its entry. The result is a workflow net with
// initial marking {source} and final marking {sink}.
PetriNet tree_to_petri(const ProcessTree& tree);

struct WorkflowShape {
  bool ok = false;
  std::string reason;  // first violation, empty when ok
};

// Unique source (empty preset) and sink (empty postset) places, markings
// {source}/{sink}, every transition with at least one input and output,
// and every node on some source-to-sink path.
WorkflowShape check_workflow_shape(const PetriNet& net);

}  // namespace logknee
