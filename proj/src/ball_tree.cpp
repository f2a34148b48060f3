#include "cellkit/ball_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cellkit {

namespace {

// valuation of the difference of two canonical centers (balls disjoint, so
// the difference is visible within the common radius)
long long center_split_height(const Ball& a, const Ball& b) {
  long long radius = std::min(a.radius(), b.radius());
  Padic diff = a.lift(radius) - b.lift(radius);
  if (!diff.known_nonzero())
    fail(errc::validation, "coincident balls in one fiber");
  return diff.ord().finite();
}

TreeNode build_node(const std::vector<Ball>& balls) {
  if (balls.size() == 1)
    return TreeNode{balls.front(), balls.front().radius(), {}};
  long long h = std::numeric_limits<long long>::max();
  for (size_t i = 0; i < balls.size(); ++i)
    for (size_t j = i + 1; j < balls.size(); ++j)
      h = std::min(h, center_split_height(balls[i], balls[j]));
  std::map<digit_t, std::vector<Ball>> groups;
  for (const Ball& b : balls) groups[b.digit_at(h)].push_back(b);
  TreeNode node{Ball(balls.front().lift(std::max(h, balls.front().radius())), h),
                h,
                {}};
  for (auto& [digit, group] : groups) node.children.push_back(build_node(group));
  return node;
}

void collect_heights(const TreeNode& n, std::set<long long>& out) {
  if (n.is_leaf()) return;
  out.insert(n.height);
  for (const TreeNode& c : n.children) collect_heights(c, out);
}

void collect_leaf_signatures(const TreeNode& n, std::vector<int>& path,
                             std::vector<std::pair<Ball, std::vector<int>>>& out) {
  if (n.is_leaf()) {
    std::vector<int> sig(path.rbegin(), path.rend());  // leaf-most first
    out.emplace_back(n.ball, sig);
    return;
  }
  path.push_back(static_cast<int>(n.children.size()));
  for (const TreeNode& c : n.children) collect_leaf_signatures(c, path, out);
  path.pop_back();
}

}  // namespace

BallTree build_tree(const std::vector<Ball>& fiber) {
  if (fiber.empty()) fail(errc::empty_fiber, "cannot build tree of empty fiber");
  std::vector<Ball> sorted = fiber;
  std::sort(sorted.begin(), sorted.end());
  return BallTree{sorted.front().prime(), build_node(sorted)};
}

std::vector<long long> branching_heights(const std::vector<Ball>& fiber) {
  BallTree t = build_tree(fiber);
  std::set<long long> hs;
  collect_heights(t.root, hs);
  return std::vector<long long>(hs.begin(), hs.end());
}

namespace {

// walk from the root to the leaf containing x, recording child counts
std::vector<int> path_arities(const BallTree& tree, const Padic& x) {
  std::vector<int> arities;
  const TreeNode* node = &tree.root;
  if (!node->ball.contains(x)) fail(errc::not_in_fiber, "point outside fiber");
  while (!node->is_leaf()) {
    arities.push_back(static_cast<int>(node->children.size()));
    digit_t d = x.digit_at(node->height);
    const TreeNode* next = nullptr;
    for (const TreeNode& c : node->children)
      if (c.ball.digit_at(node->height) == d) {
        next = &c;
        break;
      }
    if (next == nullptr) fail(errc::not_in_fiber, "point outside fiber");
    node = next;
  }
  if (!node->ball.contains(x)) fail(errc::not_in_fiber, "point outside fiber");
  return arities;  // root first
}

}  // namespace

int signature_depth(const BallTree& tree, const Padic& x) {
  return static_cast<int>(path_arities(tree, x).size());
}

std::vector<int> signature_of(const BallTree& tree, const Padic& x, int l) {
  std::vector<int> root_first = path_arities(tree, x);
  if (l < 0 || l > static_cast<int>(root_first.size()))
    fail(errc::signature_depth,
         "requested prefix " + std::to_string(l) + " of a depth-" +
             std::to_string(root_first.size()) + " path");
  std::vector<int> leaf_first(root_first.rbegin(), root_first.rend());
  leaf_first.resize(static_cast<size_t>(l));
  return leaf_first;
}

TreeTypeResult tree_type(const MultiBall& sigma) {
  TreeTypeResult out;
  std::optional<std::vector<int>> common;
  std::string first_s;
  Ball first_leaf = Ball(Padic::zero(sigma.prime()), 0);
  for (const auto& s : sigma.base()) {
    const Fiber& f = sigma.fiber(s);
    if (f.balls.empty()) continue;
    BallTree t = build_tree(f.balls);
    std::vector<std::pair<Ball, std::vector<int>>> sigs;
    std::vector<int> path;
    collect_leaf_signatures(t.root, path, sigs);
    for (const auto& [leaf, sig] : sigs) {
      if (!common) {
        common = sig;
        first_s = s;
        first_leaf = leaf;
      } else if (*common != sig) {
        out.witness = SignatureWitness{first_s, s, first_leaf, leaf, *common, sig};
        return out;
      }
    }
  }
  TreeType tt;
  if (common) {
    tt.depth = static_cast<int>(common->size());
    tt.arities = *common;
  }
  out.type = tt;
  return out;
}

bool uniform_shape(const MultiBall& sigma, std::string* detail) {
  std::optional<std::multiset<std::vector<int>>> common;
  std::string first_s;
  for (const auto& s : sigma.base()) {
    const Fiber& f = sigma.fiber(s);
    std::multiset<std::vector<int>> shape;
    if (!f.balls.empty()) {
      BallTree t = build_tree(f.balls);
      std::vector<std::pair<Ball, std::vector<int>>> sigs;
      std::vector<int> path;
      collect_leaf_signatures(t.root, path, sigs);
      for (const auto& [leaf, sig] : sigs) shape.insert(sig);
    }
    if (!common) {
      common = std::move(shape);
      first_s = s;
    } else if (*common != shape) {
      if (detail)
        *detail = "tree shapes differ between base points " + first_s + " and " + s;
      return false;
    }
  }
  return true;
}

SubsetMaximalReport is_subset_maximal(const MultiBall& sigma) {
  SubsetMaximalReport rep;
  for (const auto& s : sigma.base()) {
    const Fiber& f = sigma.fiber(s);
    std::map<Ball, long long> parents;
    for (const Ball& b : f.balls) ++parents[b.parent()];
    for (const auto& [parent, count] : parents) {
      if (count == sigma.prime()) {
        rep.maximal = false;
        rep.witness_base = s;
        rep.witness_parent = parent;
        return rep;
      }
    }
  }
  return rep;
}

CanonicalizeResult canonicalize_maximal(const MultiBall& sigma) {
  Table<std::vector<Ball>> merged;
  bool changed = false;
  for (const auto& s : sigma.base()) {
    std::set<Ball> cur(sigma.fiber(s).balls.begin(), sigma.fiber(s).balls.end());
    bool local = true;
    while (local) {
      local = false;
      std::map<Ball, std::vector<Ball>> groups;
      for (const Ball& b : cur) groups[b.parent()].push_back(b);
      for (auto& [parent, kids] : groups) {
        if (static_cast<long long>(kids.size()) == sigma.prime()) {
          for (const Ball& k : kids) cur.erase(k);
          cur.insert(parent);
          local = true;
          changed = true;
        }
      }
    }
    merged.emplace(s, std::vector<Ball>(cur.begin(), cur.end()));
  }
  if (!changed) return CanonicalizeResult{sigma, false, ""};
  // merging must leave every fiber with one radius and a common count
  std::optional<size_t> count;
  for (const auto& s : sigma.base()) {
    const auto& balls = merged.at(s);
    for (const Ball& b : balls)
      if (b.radius() != balls.front().radius())
        return CanonicalizeResult{sigma, false,
                                  "merging left mixed radii in fiber " + s};
    if (!count)
      count = balls.size();
    else if (*count != balls.size())
      return CanonicalizeResult{sigma, false,
                                "merging left unequal ball counts across fibers"};
  }
  return CanonicalizeResult{sigma.with_fiber_balls(merged), true, ""};
}

}  // namespace cellkit
