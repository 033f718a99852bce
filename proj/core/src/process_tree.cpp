#include "logknee/process_tree.hpp"

#include <stdexcept>

namespace logknee {

ProcessTree ProcessTree::make(TreeOperator op, std::vector<ProcessTree> children) {
  if (children.empty()) throw std::invalid_argument("operator node needs children");
  if (children.size() == 1) return std::move(children.front());
  ProcessTree t;
  t.kind = Kind::Operator;
  t.op = op;
  t.children = std::move(children);
  return t;
}

namespace {
void collect(const ProcessTree& tree, std::set<std::string>& out) {
  if (tree.kind == ProcessTree::Kind::Leaf) {
    if (!tree.label.empty()) out.insert(tree.label);
    return;
  }
  for (const auto& child : tree.children) collect(child, out);
}
}  // namespace

std::set<std::string> tree_alphabet(const ProcessTree& tree) {
  std::set<std::string> out;
  collect(tree, out);
  return out;
}

}  // namespace logknee
