#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellkit/multiball.hpp"

namespace cellkit {

// Rooted tree of a fiber: leaves are the fiber's balls, internal nodes sit
// at branching heights (non-branching levels are contracted), and heights
// strictly increase towards the leaves.
struct TreeNode {
  Ball ball;
  long long height;
  std::vector<TreeNode> children;

  bool is_leaf() const { return children.empty(); }
};

struct BallTree {
  long long p;
  TreeNode root;
};

BallTree build_tree(const std::vector<Ball>& fiber);

// Heights at which some ball meeting the fiber splits into >= 2 sub-balls,
// ascending. The minimum is the root height.
std::vector<long long> branching_heights(const std::vector<Ball>& fiber);

// Child counts along the root-leaf path of x, index 1 at the leaf-most
// branching height and index d at the root. Returns the first l entries.
std::vector<int> signature_of(const BallTree& tree, const Padic& x, int l);
int signature_depth(const BallTree& tree, const Padic& x);

// Branching multiplicities shared by every root-leaf path, leaf-most first.
struct TreeType {
  int depth = 0;
  std::vector<int> arities;

  int root_arity() const { return depth == 0 ? 1 : arities.back(); }
  friend bool operator==(const TreeType&, const TreeType&) = default;
};

struct SignatureWitness {
  std::string s1, s2;
  Ball leaf1, leaf2;
  std::vector<int> sig1, sig2;
};

struct TreeTypeResult {
  std::optional<TreeType> type;          // engaged iff uniform
  std::optional<SignatureWitness> witness;
};

TreeTypeResult tree_type(const MultiBall& sigma);

// Same tree shape over every base point: equal multisets of leaf
// signatures fiber by fiber. Weaker than a uniform tree type.
bool uniform_shape(const MultiBall& sigma, std::string* detail);

struct SubsetMaximalReport {
  bool maximal = true;
  std::string witness_base;
  std::optional<Ball> witness_parent;
};

SubsetMaximalReport is_subset_maximal(const MultiBall& sigma);

struct CanonicalizeResult {
  MultiBall result;
  bool changed = false;
  std::string diagnostic;  // nonempty: merging broke the multi-ball shape
};

// Replace complete sibling tilings by their parent until none remain.
CanonicalizeResult canonicalize_maximal(const MultiBall& sigma);

}  // namespace cellkit
