#include "logknee/model_text.hpp"

#include <algorithm>
#include <set>

namespace logknee {

namespace {

void render_tree_node(const ProcessTree& node, std::string& out) {
  if (node.kind == ProcessTree::Kind::Leaf) {
    out += node.is_tau() ? "tau" : node.label;
    return;
  }
  switch (node.op) {
    case TreeOperator::Sequence: out += "SEQ("; break;
    case TreeOperator::Exclusive: out += "XOR("; break;
    case TreeOperator::Parallel: out += "AND("; break;
    case TreeOperator::Loop: out += "LOOP("; break;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ", ";
    render_tree_node(node.children[i], out);
  }
  out += ')';
}

}  // namespace

ModelText render_tree(const ProcessTree& tree) {
  ModelText text;
  text.model_kind = ModelKind::Tree;
  render_tree_node(tree, text.body);
  text.activity_count = tree_alphabet(tree).size();
  text.char_length = text.body.size();
  return text;
}

ModelText render_petri(const PetriNet& net, const LogStats& stats) {
  std::string out;
  out += "STATS\n";
  out += "  traces: " + std::to_string(stats.trace_count) + "\n";
  out += "  events: " + std::to_string(stats.event_count) + "\n";
  out += "  activities: " + std::to_string(stats.activities.size()) + "\n";
  for (const auto& [activity, count] : stats.activity_frequencies)
    out += "  freq " + activity + ": " + std::to_string(count) + "\n";

  out += "PLACES\n";
  for (int p = 0; p < net.place_count; ++p) out += "  p" + std::to_string(p) + "\n";

  out += "TRANSITIONS\n";
  std::vector<std::string> names;
  names.reserve(net.transitions.size());
  for (const auto& t : net.transitions) names.push_back(net.transition_name(t.id));
  std::sort(names.begin(), names.end());
  for (const auto& name : names) out += "  " + name + "\n";

  out += "ARCS\n";
  std::vector<std::pair<std::string, std::string>> arcs;
  arcs.reserve(net.arcs.size());
  for (const auto& arc : net.arcs) {
    std::string place = "p" + std::to_string(arc.place);
    std::string transition = net.transition_name(arc.transition);
    if (arc.place_to_transition)
      arcs.emplace_back(std::move(place), std::move(transition));
    else
      arcs.emplace_back(std::move(transition), std::move(place));
  }
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [from, to] : arcs) out += "  " + from + " -> " + to + "\n";

  auto marking_lines = [&](const std::map<int, int>& marking) {
    std::string lines;
    for (const auto& [place, count] : marking) {
      for (int i = 0; i < count; ++i) lines += "  p" + std::to_string(place) + "\n";
    }
    return lines;
  };
  out += "INITIAL\n" + marking_lines(net.initial_marking);
  out += "FINAL\n" + marking_lines(net.final_marking);

  ModelText text;
  text.model_kind = ModelKind::Petri;
  text.body = std::move(out);
  text.activity_count = net.visible_alphabet().size();
  text.char_length = text.body.size();
  return text;
}

std::vector<std::string> transition_labels_of_body(const std::string& body) {
  std::vector<std::string> labels;
  std::size_t pos = 0;
  bool in_section = false;
  while (pos < body.size()) {
    std::size_t eol = body.find('\n', pos);
    if (eol == std::string::npos) eol = body.size();
    std::string_view line(body.data() + pos, eol - pos);
    pos = eol + 1;
    if (!line.starts_with("  ")) {
      in_section = line == "TRANSITIONS";
      continue;
    }
    if (!in_section) continue;
    std::string name(line.substr(2));
    if (!name.starts_with("tau_")) labels.push_back(std::move(name));
  }
  return labels;
}

}  // namespace logknee
