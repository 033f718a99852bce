#include "logknee/inductive_miner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace logknee {

namespace {

// Activities are interned to dense ids assigned in lexicographic label
// order, so id order is label order and every partition below comes out
// deterministic.
using Variant = std::vector<int>;

struct SubLog {
  std::vector<Variant> traces;
};

// Directly-follows structure over the activities present in a sub-log.
// Edge presence is all the cut detectors need; counts are irrelevant.
struct IdDfg {
  std::vector<int> nodes;                 // sorted, ascending
  std::set<std::pair<int, int>> edges;    // directed
  std::set<int> starts;
  std::set<int> ends;

  bool edge(int a, int b) const { return edges.count({a, b}) > 0; }
};

IdDfg build_id_dfg(const SubLog& log) {
  IdDfg dfg;
  std::set<int> nodes;
  for (const auto& trace : log.traces) {
    for (int a : trace) nodes.insert(a);
    if (trace.empty()) continue;
    dfg.starts.insert(trace.front());
    dfg.ends.insert(trace.back());
    for (std::size_t i = 1; i < trace.size(); ++i) dfg.edges.insert({trace[i - 1], trace[i]});
  }
  dfg.nodes.assign(nodes.begin(), nodes.end());
  return dfg;
}

// A cut is an ordered partition of the sub-log's activities.
using Partition = std::vector<std::vector<int>>;

class UnionFind {
 public:
  explicit UnionFind(const std::vector<int>& ids) {
    for (int id : ids) parent_[id] = id;
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // keep the smaller id as representative for deterministic output
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

  // Groups keyed by representative; each group sorted ascending.
  Partition groups() {
    std::map<int, std::vector<int>> by_root;
    for (const auto& [id, _] : parent_) by_root[find(id)].push_back(id);
    Partition out;
    for (auto& [root, members] : by_root) {
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

 private:
  std::map<int, int> parent_;
};

// --- cut detection -------------------------------------------------------

// Exclusive choice: connected components of the undirected DFG.
std::optional<Partition> exclusive_cut(const IdDfg& dfg) {
  UnionFind uf(dfg.nodes);
  for (const auto& [a, b] : dfg.edges) uf.unite(a, b);
  Partition parts = uf.groups();
  if (parts.size() < 2) return std::nullopt;
  return parts;
}

// Sequence: condense the DFG into strongly connected components, merge
// pairwise-unreachable components, and order what remains by
// reachability. Succeeds when at least two ordered groups survive.
std::optional<Partition> sequence_cut(const IdDfg& dfg) {
  const int n = static_cast<int>(dfg.nodes.size());
  if (n < 2) return std::nullopt;
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[dfg.nodes[i]] = i;

  std::vector<std::vector<int>> succ(n);
  for (const auto& [a, b] : dfg.edges) succ[index.at(a)].push_back(index.at(b));

  // Tarjan SCC, iterative.
  std::vector<int> low(n, -1), num(n, -1), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, comp_count = 0;
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<std::pair<int, std::size_t>> work{{root, 0}};
    while (!work.empty()) {
      auto& [v, edge_idx] = work.back();
      if (edge_idx == 0) {
        num[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (edge_idx < succ[v].size()) {
        int w = succ[v][edge_idx++];
        if (num[w] == -1) {
          work.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], num[w]);
      }
      if (descended) continue;
      if (low[v] == num[v]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      int finished = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[finished]);
    }
  }
  if (comp_count < 2) return std::nullopt;

  // Reachability closure over the condensation.
  std::vector<std::vector<bool>> reach(comp_count, std::vector<bool>(comp_count, false));
  for (const auto& [a, b] : dfg.edges) {
    int ca = comp[index.at(a)], cb = comp[index.at(b)];
    if (ca != cb) reach[ca][cb] = true;
  }
  for (int k = 0; k < comp_count; ++k)
    for (int i = 0; i < comp_count; ++i)
      if (reach[i][k])
        for (int j = 0; j < comp_count; ++j)
          if (reach[k][j]) reach[i][j] = true;

  // Merge SCCs with no path either way; repeat until the merge relation
  // is closed, since merging unions the reachability of the members.
  std::vector<int> group(comp_count);
  std::iota(group.begin(), group.end(), 0);
  auto group_reach = [&](int ga, int gb) {
    for (int i = 0; i < comp_count; ++i) {
      if (group[i] != ga) continue;
      for (int j = 0; j < comp_count; ++j)
        if (group[j] == gb && reach[i][j]) return true;
    }
    return false;
  };
  bool merged = true;
  while (merged) {
    merged = false;
    for (int a = 0; a < comp_count && !merged; ++a) {
      if (group[a] != a) continue;
      for (int b = a + 1; b < comp_count && !merged; ++b) {
        if (group[b] != b) continue;
        if (!group_reach(a, b) && !group_reach(b, a)) {
          for (int i = 0; i < comp_count; ++i)
            if (group[i] == b) group[i] = a;
          merged = true;
        }
      }
    }
  }

  std::vector<int> reps;
  for (int i = 0; i < comp_count; ++i)
    if (group[i] == i) reps.push_back(i);
  if (reps.size() < 2) return std::nullopt;

  // Order groups by predecessor count, then verify the result is a
  // strict total order. Group-level reachability need not be transitive
  // after merging, so both checks are required before accepting the cut.
  std::vector<std::size_t> pred_count(reps.size(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (i != j && group_reach(reps[j], reps[i])) ++pred_count[i];
  std::vector<int> ordered(reps.size(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (pred_count[i] >= reps.size() || ordered[pred_count[i]] != -1) return std::nullopt;
    ordered[pred_count[i]] = reps[i];
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      if (!group_reach(ordered[i], ordered[j])) return std::nullopt;
      if (group_reach(ordered[j], ordered[i])) return std::nullopt;
    }
  }

  Partition parts(ordered.size());
  std::map<int, std::size_t> rep_pos;
  for (std::size_t i = 0; i < ordered.size(); ++i) rep_pos[ordered[i]] = i;
  for (int i = 0; i < n; ++i) parts[rep_pos.at(group[comp[i]])].push_back(dfg.nodes[i]);
  for (auto& part : parts) std::sort(part.begin(), part.end());
  return parts;
}

// Parallel: components where every cross-component pair is connected in
// both directions; pairs missing either direction must share a
// component. Each surviving component needs a start and an end activity;
// ones lacking them are merged into the first component that has both.
std::optional<Partition> parallel_cut(const IdDfg& dfg) {
  if (dfg.nodes.size() < 2) return std::nullopt;
  UnionFind uf(dfg.nodes);
  for (std::size_t i = 0; i < dfg.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < dfg.nodes.size(); ++j) {
      int a = dfg.nodes[i], b = dfg.nodes[j];
      if (!(dfg.edge(a, b) && dfg.edge(b, a))) uf.unite(a, b);
    }
  }
  Partition parts = uf.groups();
  if (parts.size() < 2) return std::nullopt;

  auto has_start_and_end = [&](const std::vector<int>& part) {
    bool s = false, e = false;
    for (int a : part) {
      s = s || dfg.starts.count(a) > 0;
      e = e || dfg.ends.count(a) > 0;
    }
    return s && e;
  };

  std::size_t anchor = parts.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (has_start_and_end(parts[i])) {
      anchor = i;
      break;
    }
  }
  if (anchor == parts.size()) return std::nullopt;

  Partition result;
  std::vector<int> merged = parts[anchor];
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == anchor) continue;
    if (has_start_and_end(parts[i])) {
      result.push_back(parts[i]);
    } else {
      merged.insert(merged.end(), parts[i].begin(), parts[i].end());
    }
  }
  std::sort(merged.begin(), merged.end());
  result.push_back(std::move(merged));
  std::sort(result.begin(), result.end());
  if (result.size() < 2) return std::nullopt;
  return result;
}

// Loop: the do-body holds every start and end activity; the remaining
// connected components are redo parts provided the boundary is strictly
// end -> redo and redo -> start. Violating components fold into the
// body. Returns {body, redo}; all redo components are handled by one
// recursion, where the exclusive cut separates them again if needed.
std::optional<Partition> loop_cut(const IdDfg& dfg) {
  std::set<int> boundary;
  boundary.insert(dfg.starts.begin(), dfg.starts.end());
  boundary.insert(dfg.ends.begin(), dfg.ends.end());
  if (boundary.size() == dfg.nodes.size()) return std::nullopt;

  std::vector<int> rest;
  for (int a : dfg.nodes)
    if (!boundary.count(a)) rest.push_back(a);

  UnionFind uf(rest);
  for (const auto& [a, b] : dfg.edges) {
    if (!boundary.count(a) && !boundary.count(b)) uf.unite(a, b);
  }

  std::vector<int> body(boundary.begin(), boundary.end());
  std::vector<int> redo;
  for (const auto& part : uf.groups()) {
    std::set<int> members(part.begin(), part.end());
    bool ok = true;
    for (const auto& [a, b] : dfg.edges) {
      bool a_in = members.count(a) > 0, b_in = members.count(b) > 0;
      if (a_in == b_in) continue;
      if (!a_in && b_in && !dfg.ends.count(a)) ok = false;    // entry not from an end
      if (a_in && !b_in && !dfg.starts.count(b)) ok = false;  // exit not into a start
      if (!ok) break;
    }
    auto& target = ok ? redo : body;
    target.insert(target.end(), part.begin(), part.end());
  }
  if (redo.empty()) return std::nullopt;
  std::sort(body.begin(), body.end());
  std::sort(redo.begin(), redo.end());
  return Partition{std::move(body), std::move(redo)};
}

// --- log splitting -------------------------------------------------------

std::vector<int> component_of_activity(const Partition& parts) {
  std::vector<int> map;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    for (int a : parts[c]) {
      if (a >= static_cast<int>(map.size())) map.resize(a + 1, -1);
      map[a] = static_cast<int>(c);
    }
  }
  return map;
}

// Every trace lies entirely inside one exclusive component.
std::vector<SubLog> split_exclusive(const SubLog& log, const Partition& parts) {
  auto comp = component_of_activity(parts);
  std::vector<SubLog> subs(parts.size());
  for (const auto& trace : log.traces) subs[comp[trace.front()]].traces.push_back(trace);
  return subs;
}

// Component indices never decrease along a trace once the sequence cut
// holds, so each trace contributes exactly one (possibly empty) segment
// per component.
std::vector<SubLog> split_sequence(const SubLog& log, const Partition& parts) {
  auto comp = component_of_activity(parts);
  std::vector<SubLog> subs(parts.size());
  for (const auto& trace : log.traces) {
    std::size_t current = 0;
    Variant segment;
    for (int a : trace) {
      auto c = static_cast<std::size_t>(comp[a]);
      while (current < c) {
        subs[current].traces.push_back(std::move(segment));
        segment.clear();
        ++current;
      }
      segment.push_back(a);
    }
    while (current < parts.size()) {
      subs[current].traces.push_back(std::move(segment));
      segment.clear();
      ++current;
    }
  }
  return subs;
}

std::vector<SubLog> split_parallel(const SubLog& log, const Partition& parts) {
  auto comp = component_of_activity(parts);
  std::vector<SubLog> subs(parts.size());
  for (const auto& trace : log.traces) {
    std::vector<Variant> projections(parts.size());
    for (int a : trace) projections[comp[a]].push_back(a);
    for (std::size_t c = 0; c < parts.size(); ++c)
      subs[c].traces.push_back(std::move(projections[c]));
  }
  return subs;
}

// Alternating body/redo segments; traces start and end with a body
// segment (inserted empty when the raw trace does not).
std::vector<SubLog> split_loop(const SubLog& log, const Partition& parts) {
  std::set<int> body(parts[0].begin(), parts[0].end());
  std::vector<SubLog> subs(2);
  for (const auto& trace : log.traces) {
    bool in_body = true;
    Variant segment;
    for (int a : trace) {
      bool a_in_body = body.count(a) > 0;
      if (a_in_body != in_body) {
        subs[in_body ? 0 : 1].traces.push_back(std::move(segment));
        segment.clear();
        in_body = a_in_body;
      }
      segment.push_back(a);
    }
    subs[in_body ? 0 : 1].traces.push_back(std::move(segment));
    if (!in_body) subs[0].traces.push_back({});  // close with an empty body segment
  }
  return subs;
}

// --- recursion -----------------------------------------------------------

struct Miner {
  std::vector<std::string> labels;  // id -> label, lexicographic

  ProcessTree leaf(int id) const { return ProcessTree::leaf(labels[id]); }

  ProcessTree exclusive_over(const std::vector<int>& ids) const {
    std::vector<ProcessTree> leaves;
    leaves.reserve(ids.size());
    for (int id : ids) leaves.push_back(leaf(id));
    return ProcessTree::make(TreeOperator::Exclusive, std::move(leaves));
  }

  ProcessTree discover(const SubLog& log) const {
    if (log.traces.empty()) return ProcessTree::tau();

    SubLog non_empty;
    for (const auto& trace : log.traces)
      if (!trace.empty()) non_empty.traces.push_back(trace);

    if (non_empty.traces.empty()) return ProcessTree::tau();
    if (non_empty.traces.size() < log.traces.size()) {
      // Empty variants alongside others: XOR(tau, rest).
      std::vector<ProcessTree> children;
      children.push_back(ProcessTree::tau());
      children.push_back(discover(non_empty));
      return ProcessTree::make(TreeOperator::Exclusive, std::move(children));
    }

    // Base case: every trace is the same single activity, exactly once.
    bool single = true;
    for (const auto& trace : non_empty.traces) {
      if (trace.size() != 1 || trace.front() != non_empty.traces.front().front()) {
        single = false;
        break;
      }
    }
    if (single) return leaf(non_empty.traces.front().front());

    const IdDfg dfg = build_id_dfg(non_empty);

    if (auto parts = exclusive_cut(dfg))
      return recurse(TreeOperator::Exclusive, split_exclusive(non_empty, *parts));
    if (auto parts = sequence_cut(dfg))
      return recurse(TreeOperator::Sequence, split_sequence(non_empty, *parts));
    if (auto parts = parallel_cut(dfg))
      return recurse(TreeOperator::Parallel, split_parallel(non_empty, *parts));
    if (auto parts = loop_cut(dfg))
      return recurse(TreeOperator::Loop, split_loop(non_empty, *parts));

    // Flower model over the alphabet: accepts any sequence over it.
    std::vector<ProcessTree> loop_children;
    loop_children.push_back(ProcessTree::tau());
    loop_children.push_back(exclusive_over(dfg.nodes));
    ProcessTree flower;
    flower.kind = ProcessTree::Kind::Operator;
    flower.op = TreeOperator::Loop;
    flower.children = std::move(loop_children);
    return flower;
  }

  ProcessTree recurse(TreeOperator op, const std::vector<SubLog>& subs) const {
    std::vector<ProcessTree> children;
    children.reserve(subs.size());
    for (const auto& sub : subs) children.push_back(discover(sub));
    if (op == TreeOperator::Loop) {
      ProcessTree t;
      t.kind = ProcessTree::Kind::Operator;
      t.op = op;
      t.children = std::move(children);
      return t;
    }
    return ProcessTree::make(op, std::move(children));
  }
};

}  // namespace

ProcessTree discover_inductive(const EventLog& log) {
  std::set<std::string> alphabet;
  for (const auto& trace : log.traces)
    for (const auto& event : trace.events) alphabet.insert(event.activity);

  Miner miner;
  miner.labels.assign(alphabet.begin(), alphabet.end());
  std::map<std::string, int> ids;
  for (std::size_t i = 0; i < miner.labels.size(); ++i) ids[miner.labels[i]] = static_cast<int>(i);

  SubLog sub;
  sub.traces.reserve(log.traces.size());
  for (const auto& trace : log.traces) {
    Variant variant;
    variant.reserve(trace.events.size());
    for (const auto& event : trace.events) variant.push_back(ids.at(event.activity));
    sub.traces.push_back(std::move(variant));
  }
  return miner.discover(sub);
}

}  // namespace logknee
