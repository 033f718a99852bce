#include "logknee/replay.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

#include "logknee/errors.hpp"

namespace logknee {

namespace {

using Marking = std::vector<int>;  // token count per place

struct NetIndex {
  std::vector<std::vector<int>> inputs;   // transition -> input places
  std::vector<std::vector<int>> outputs;  // transition -> output places
  std::vector<int> silent_ids;            // ascending
  std::map<std::string, std::vector<int>> by_label;

  explicit NetIndex(const PetriNet& net)
      : inputs(net.transitions.size()), outputs(net.transitions.size()) {
    for (const auto& arc : net.arcs) {
      if (arc.place_to_transition)
        inputs[arc.transition].push_back(arc.place);
      else
        outputs[arc.transition].push_back(arc.place);
    }
    for (const auto& t : net.transitions) {
      if (t.silent())
        silent_ids.push_back(t.id);
      else
        by_label[*t.label].push_back(t.id);
    }
  }

  bool enabled(const Marking& m, int t) const {
    for (int p : inputs[t])
      if (m[p] <= 0) return false;
    return true;
  }
};

struct Replayer {
  const NetIndex& index;
  Marking marking;
  ReplayResult result;

  // Fires t, synthesizing (and counting) missing input tokens.
  void fire(int t) {
    for (int p : index.inputs[t]) {
      if (marking[p] <= 0)
        ++result.missing;
      else
        --marking[p];
      ++result.consumed;
    }
    for (int p : index.outputs[t]) {
      ++marking[p];
      ++result.produced;
    }
  }

  // Breadth-first search over silent firings from the current marking,
  // visiting markings at most once, up to `depth` firings. Applies the
  // shortest silent prefix that makes `accept` true and reports whether
  // one was found. Ties resolve by silent id order, so replay is
  // deterministic.
  template <typename Accept>
  bool advance_through_silents(std::size_t depth, Accept accept) {
    if (accept(marking)) return true;
    struct Node {
      Marking marking;
      int parent;
      int fired;
    };
    std::vector<Node> nodes{{marking, -1, -1}};
    std::map<Marking, int> seen{{marking, 0}};
    std::queue<std::pair<int, std::size_t>> frontier;
    frontier.push({0, 0});
    while (!frontier.empty()) {
      auto [node_idx, dist] = frontier.front();
      frontier.pop();
      if (dist >= depth) continue;
      for (int t : index.silent_ids) {
        if (!index.enabled(nodes[node_idx].marking, t)) continue;
        Marking next = nodes[node_idx].marking;
        for (int p : index.inputs[t]) --next[p];
        for (int p : index.outputs[t]) ++next[p];
        if (seen.count(next)) continue;
        int next_idx = static_cast<int>(nodes.size());
        nodes.push_back({std::move(next), node_idx, t});
        seen.emplace(nodes.back().marking, next_idx);
        if (accept(nodes.back().marking)) {
          // Re-fire the path from the root so the token counters see it.
          std::vector<int> path;
          for (int i = next_idx; i > 0; i = nodes[i].parent) path.push_back(nodes[i].fired);
          std::reverse(path.begin(), path.end());
          for (int fired : path) fire(fired);
          return true;
        }
        frontier.push({next_idx, dist + 1});
      }
    }
    return false;
  }
};

}  // namespace

ReplayResult replay(const PetriNet& net, const Trace& trace) {
  const NetIndex index(net);
  for (const auto& event : trace.events) {
    if (!index.by_label.count(event.activity))
      throw UnknownActivityError("trace '" + trace.case_id + "' contains activity '" +
                                 event.activity + "' absent from the net");
  }

  Replayer replayer{index, Marking(static_cast<std::size_t>(net.place_count), 0), {}};
  for (const auto& [place, count] : net.initial_marking) {
    replayer.marking[place] += count;
    replayer.result.produced += static_cast<std::uint64_t>(count);
  }
  const std::size_t depth = std::max<std::size_t>(index.silent_ids.size(), 1);

  for (const auto& event : trace.events) {
    const auto& candidates = index.by_label.at(event.activity);
    auto any_enabled = [&](const Marking& m) {
      for (int t : candidates)
        if (index.enabled(m, t)) return true;
      return false;
    };
    replayer.advance_through_silents(depth, any_enabled);
    int chosen = candidates.front();
    for (int t : candidates) {
      if (index.enabled(replayer.marking, t)) {
        chosen = t;
        break;
      }
    }
    replayer.fire(chosen);
  }

  Marking target(static_cast<std::size_t>(net.place_count), 0);
  for (const auto& [place, count] : net.final_marking) target[place] = count;
  const bool reached =
      replayer.advance_through_silents(depth, [&](const Marking& m) { return m == target; });

  if (reached) {
    for (int count : target) replayer.result.consumed += static_cast<std::uint64_t>(count);
  } else {
    // Count the shortfall against the final marking as missing and
    // everything beyond it as remaining.
    for (int p = 0; p < net.place_count; ++p) {
      int have = replayer.marking[p];
      int want = target[p];
      replayer.result.missing += static_cast<std::uint64_t>(std::max(want - have, 0));
      replayer.result.remaining += static_cast<std::uint64_t>(std::max(have - want, 0));
      replayer.result.consumed += static_cast<std::uint64_t>(std::min(have, want));
    }
  }
  replayer.result.fits = replayer.result.missing == 0 && replayer.result.remaining == 0;
  return replayer.result;
}

}  // namespace logknee
