#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpavoid/numeric.hpp"
#include "gpavoid/perm.hpp"

namespace gpavoid {

struct TreeNode {
  int label = 0;
  std::vector<TreeNode> children;  // kept sorted by label

  bool operator==(const TreeNode&) const = default;
};

// A rooted tree on labels 0..n (root = 0) in which labels increase away
// from the root and no node has a single leaf as its only child (every
// leaf has a sibling or an internal only-child parent chain above it).
class IncreasingTrimmedTree {
 public:
  // Validates labels, the increasing property and the trimmed property;
  // throws std::invalid_argument naming the offending node. Children are
  // sorted by label on construction.
  explicit IncreasingTrimmedTree(TreeNode root);

  static IncreasingTrimmedTree single_root() { return IncreasingTrimmedTree(TreeNode{}); }
  static IncreasingTrimmedTree from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  const TreeNode& root() const { return root_; }
  int node_count() const { return node_count_; }

  bool operator==(const IncreasingTrimmedTree&) const = default;

 private:
  TreeNode root_;
  int node_count_ = 1;
};

// The bijection of segment decomposition by right-to-left minima: the
// minima label the root's children and each minimum's preceding segment
// is decomposed recursively below it. Domain: the empty permutation, or
// a permutation avoiding the contiguous pattern "132" whose first two
// letters ascend. Throws std::domain_error outside the domain.
IncreasingTrimmedTree perm_to_tree(const Permutation& p);

// Exact inverse: emit each subtree before its root label, children in
// increasing label order.
Permutation tree_to_perm(const IncreasingTrimmedTree& t);

// Exhaustive enumeration over parent assignments (parent of i is any
// label < i), filtered by the trimmed property.
void for_each_irtt(int node_count, const std::function<void(const IncreasingTrimmedTree&)>& fn);
BigCount count_irtt(int node_count);

}  // namespace gpavoid
