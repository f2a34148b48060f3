#include "cellkit/dot.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cellkit {

namespace {

struct NodeRef {
  const TreeNode* node;
  const TreeNode* parent;
  std::string label;
};

void collect(const TreeNode& n, const TreeNode* parent, std::vector<NodeRef>& out) {
  std::ostringstream label;
  label << "h=" << n.height << " ball=" << n.ball.center_text();
  out.push_back(NodeRef{&n, parent, label.str()});
  for (const TreeNode& c : n.children) collect(c, &n, out);
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])))
    out.insert(out.begin(), 'g');
  return out;
}

}  // namespace

std::string tree_dot(const std::string& graph_name, const BallTree& tree) {
  std::vector<NodeRef> nodes;
  collect(tree.root, nullptr, nodes);
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const NodeRef& a, const NodeRef& b) {
                     return std::make_pair(a.node->ball.center_text(), a.node->height) <
                            std::make_pair(b.node->ball.center_text(), b.node->height);
                   });
  std::map<const TreeNode*, size_t> id;
  for (size_t i = 0; i < nodes.size(); ++i) id[nodes[i].node] = i;

  std::ostringstream dot;
  dot << "digraph " << sanitize(graph_name) << " {\n";
  dot << "  node [shape=box];\n";
  for (size_t i = 0; i < nodes.size(); ++i)
    dot << "  n" << i << " [label=\"" << nodes[i].label << "\"];\n";
  std::vector<std::pair<size_t, size_t>> edges;
  for (const NodeRef& n : nodes)
    if (n.parent != nullptr) edges.emplace_back(id[n.parent], id[n.node]);
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) dot << "  n" << a << " -> n" << b << ";\n";
  dot << "}\n";
  return dot.str();
}

std::string multiball_dot(const MultiBall& sigma) {
  std::ostringstream out;
  for (const auto& s : sigma.base()) {
    const Fiber& f = sigma.fiber(s);
    if (f.balls.empty()) {
      out << "digraph " << sanitize("fiber_" + s) << " {\n}\n";
      continue;
    }
    out << tree_dot("fiber_" + s, build_tree(f.balls));
  }
  return out.str();
}

}  // namespace cellkit
