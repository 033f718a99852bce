#include "logknee/petri_net.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace logknee {

std::string PetriNet::transition_name(int id) const {
  int tau_index = 0;
  for (const auto& t : transitions) {
    if (t.id == id) {
      if (t.label) return *t.label;
      return "tau_" + std::to_string(tau_index);
    }
    if (t.silent()) ++tau_index;
  }
  throw std::out_of_range("no transition with id " + std::to_string(id));
}

std::vector<std::string> PetriNet::visible_alphabet() const {
  std::set<std::string> labels;
  for (const auto& t : transitions)
    if (t.label) labels.insert(*t.label);
  return {labels.begin(), labels.end()};
}

std::size_t PetriNet::silent_count() const {
  std::size_t n = 0;
  for (const auto& t : transitions)
    if (t.silent()) ++n;
  return n;
}

namespace {

struct Builder {
  PetriNet net;

  int add_place() { return net.place_count++; }

  int add_transition(std::optional<std::string> label) {
    int id = static_cast<int>(net.transitions.size());
    net.transitions.push_back({id, std::move(label)});
    return id;
  }

  void arc_pt(int place, int transition) { net.arcs.push_back({true, place, transition}); }
  void arc_tp(int transition, int place) { net.arcs.push_back({false, place, transition}); }

  void build(const ProcessTree& node, int entry, int exit) {
    if (node.kind == ProcessTree::Kind::Leaf) {
      int t = add_transition(node.is_tau() ? std::nullopt : std::optional(node.label));
      arc_pt(entry, t);
      arc_tp(t, exit);
      return;
    }
    switch (node.op) {
      case TreeOperator::Sequence: {
        int from = entry;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          int to = i + 1 == node.children.size() ? exit : add_place();
          build(node.children[i], from, to);
          from = to;
        }
        break;
      }
      case TreeOperator::Exclusive: {
        for (const auto& child : node.children) build(child, entry, exit);
        break;
      }
      case TreeOperator::Parallel: {
        int fork = add_transition(std::nullopt);
        int join = add_transition(std::nullopt);
        arc_pt(entry, fork);
        arc_tp(join, exit);
        for (const auto& child : node.children) {
          int in = add_place();
          int out = add_place();
          arc_tp(fork, in);
          build(child, in, out);
          arc_pt(out, join);
        }
        break;
      }
      case TreeOperator::Loop: {
        if (node.children.size() != 2)
          throw std::invalid_argument("loop node needs exactly do and redo children");
        int body_in = add_place();
        int body_out = add_place();
        int enter = add_transition(std::nullopt);
        int leave = add_transition(std::nullopt);
        arc_pt(entry, enter);
        arc_tp(enter, body_in);
        build(node.children[0], body_in, body_out);
        arc_pt(body_out, leave);
        arc_tp(leave, exit);
        build(node.children[1], body_out, body_in);
        break;
      }
    }
  }
};

}  // namespace

PetriNet tree_to_petri(const ProcessTree& tree) {
  Builder builder;
  int source = builder.add_place();  // id 0
  int sink = builder.add_place();    // id 1
  builder.build(tree, source, sink);
  builder.net.initial_marking[source] = 1;
  builder.net.final_marking[sink] = 1;
  return builder.net;
}

WorkflowShape check_workflow_shape(const PetriNet& net) {
  const int places = net.place_count;
  const int transitions = static_cast<int>(net.transitions.size());
  if (places < 2) return {false, "fewer than two places"};

  std::vector<int> place_in(places, 0), place_out(places, 0);
  std::vector<int> trans_in(transitions, 0), trans_out(transitions, 0);
  for (const auto& arc : net.arcs) {
    if (arc.place < 0 || arc.place >= places || arc.transition < 0 || arc.transition >= transitions)
      return {false, "arc references unknown node"};
    if (arc.place_to_transition) {
      ++place_out[arc.place];
      ++trans_in[arc.transition];
    } else {
      ++place_in[arc.place];
      ++trans_out[arc.transition];
    }
  }

  int source = -1, sink = -1;
  for (int p = 0; p < places; ++p) {
    if (place_in[p] == 0) {
      if (source != -1) return {false, "multiple source places"};
      source = p;
    }
    if (place_out[p] == 0) {
      if (sink != -1) return {false, "multiple sink places"};
      sink = p;
    }
  }
  if (source == -1) return {false, "no source place"};
  if (sink == -1) return {false, "no sink place"};
  for (int t = 0; t < transitions; ++t) {
    if (trans_in[t] == 0) return {false, "transition without input: " + net.transition_name(t)};
    if (trans_out[t] == 0) return {false, "transition without output: " + net.transition_name(t)};
  }
  if (net.initial_marking != std::map<int, int>{{source, 1}})
    return {false, "initial marking is not exactly the source place"};
  if (net.final_marking != std::map<int, int>{{sink, 1}})
    return {false, "final marking is not exactly the sink place"};

  // Node indices: places [0, places), transitions [places, places+transitions).
  auto reachable = [&](int start, bool forward) {
    std::vector<std::vector<int>> next(places + transitions);
    for (const auto& arc : net.arcs) {
      int p = arc.place, t = places + arc.transition;
      int from = arc.place_to_transition ? p : t;
      int to = arc.place_to_transition ? t : p;
      if (forward)
        next[from].push_back(to);
      else
        next[to].push_back(from);
    }
    std::vector<bool> seen(places + transitions, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : next[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  };

  const auto from_source = reachable(source, true);
  const auto to_sink = reachable(sink, false);
  for (int v = 0; v < places + transitions; ++v) {
    if (!from_source[v] || !to_sink[v]) {
      std::string name = v < places ? "p" + std::to_string(v) : net.transition_name(v - places);
      return {false, "node off the source-to-sink path: " + name};
    }
  }
  return {true, ""};
}

}  // namespace logknee
