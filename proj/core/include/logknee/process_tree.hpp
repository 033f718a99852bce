#pragma once

#include <set>
#include <string>
#include <vector>

namespace logknee {

enum class TreeOperator {
  Sequence,
  Exclusive,
  Parallel,
  Loop,  // exactly two children: do-part, redo-part
};

// Block-structured process model. A node is either a leaf (activity
// label, silent when the label is empty) or an operator over at least
// two ordered children.
struct ProcessTree {
  enum class Kind { Leaf, Operator };

  Kind kind = Kind::Leaf;
  std::string label;  // leaf only; empty means tau
  TreeOperator op = TreeOperator::Sequence;
  std::vector<ProcessTree> children;

  bool is_tau() const { return kind == Kind::Leaf && label.empty(); }

  static ProcessTree tau() { return ProcessTree{}; }

  static ProcessTree leaf(std::string activity) {
    ProcessTree t;
    t.label = std::move(activity);
    return t;
  }

  static ProcessTree make(TreeOperator op, std::vector<ProcessTree> children);

  bool operator==(const ProcessTree&) const = default;
};

// Distinct visible (non-tau) leaf labels.
std::set<std::string> tree_alphabet(const ProcessTree& tree);

}  // namespace logknee
