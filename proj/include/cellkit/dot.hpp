#pragma once

#include <string>

#include "cellkit/ball_tree.hpp"

namespace cellkit {

// One digraph per fiber; nodes labeled `h=<height> ball=<canonical center>`
// and ordered lexicographically by canonical center for byte-stable output.
std::string tree_dot(const std::string& graph_name, const BallTree& tree);
std::string multiball_dot(const MultiBall& sigma);

}  // namespace cellkit
