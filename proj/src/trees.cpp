#include "gpavoid/trees.hpp"

#include <algorithm>
#include <stdexcept>

#include "gpavoid/pattern.hpp"

namespace gpavoid {

namespace {

void normalize(TreeNode& node) {
  std::sort(node.children.begin(), node.children.end(),
            [](const TreeNode& a, const TreeNode& b) { return a.label < b.label; });
  for (auto& c : node.children) normalize(c);
}

void validate(const TreeNode& node, std::vector<bool>& seen) {
  if (node.label < 0 || node.label >= static_cast<int>(seen.size()) || seen[node.label])
    throw std::invalid_argument("node labels must be 0..n, each exactly once (node " +
                                std::to_string(node.label) + ")");
  seen[node.label] = true;
  if (node.children.size() == 1 && node.children.front().children.empty())
    throw std::invalid_argument("node " + std::to_string(node.label) +
                                " has a single leaf child; the tree is not trimmed");
  for (const auto& c : node.children) {
    if (c.label <= node.label)
      throw std::invalid_argument("child label " + std::to_string(c.label) +
                                  " does not exceed its parent " + std::to_string(node.label));
    validate(c, seen);
  }
}

int count_nodes(const TreeNode& node) {
  int total = 1;
  for (const auto& c : node.children) total += count_nodes(c);
  return total;
}

}  // namespace

IncreasingTrimmedTree::IncreasingTrimmedTree(TreeNode root) : root_(std::move(root)) {
  if (root_.label != 0) throw std::invalid_argument("the root must be labeled 0");
  normalize(root_);
  node_count_ = count_nodes(root_);
  std::vector<bool> seen(node_count_, false);
  validate(root_, seen);
}

IncreasingTrimmedTree IncreasingTrimmedTree::from_json(const nlohmann::json& j) {
  const std::function<TreeNode(const nlohmann::json&)> read = [&](const nlohmann::json& node) {
    if (!node.is_object() || !node.contains("label"))
      throw std::invalid_argument("tree JSON nodes need a \"label\"");
    TreeNode out;
    out.label = node.at("label").get<int>();
    if (node.contains("children"))
      for (const auto& c : node.at("children")) out.children.push_back(read(c));
    return out;
  };
  return IncreasingTrimmedTree(read(j));
}

nlohmann::ordered_json IncreasingTrimmedTree::to_json() const {
  const std::function<nlohmann::ordered_json(const TreeNode&)> write = [&](const TreeNode& node) {
    nlohmann::ordered_json j;
    j["label"] = node.label;
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : node.children) j["children"].push_back(write(c));
    return j;
  };
  return write(root_);
}

namespace {

// Decompose w = P_0 a_0 P_1 a_1 ... P_r a_r along its right-to-left
// minima a_i and hang each segment P_i below its minimum.
TreeNode build_subtree(int label, std::span<const int> w) {
  TreeNode node;
  node.label = label;
  if (w.empty()) return node;
  const int size = static_cast<int>(w.size());
  std::vector<int> minima_pos;
  int running_min = 0;
  for (int i = size - 1; i >= 0; --i) {
    if (minima_pos.empty() || w[i] < running_min) {
      running_min = w[i];
      minima_pos.push_back(i);
    }
  }
  std::reverse(minima_pos.begin(), minima_pos.end());
  int segment_start = 0;
  for (int pos : minima_pos) {
    node.children.push_back(build_subtree(w[pos], w.subspan(segment_start, pos - segment_start)));
    segment_start = pos + 1;
  }
  return node;
}

}  // namespace

IncreasingTrimmedTree perm_to_tree(const Permutation& p) {
  if (!p.empty()) {
    static const GeneralizedPattern kContiguous132 = GeneralizedPattern::parse("132");
    if (!boundary_satisfies(p, {Placement::begin, Direction::increasing, 2}))
      throw std::domain_error("permutation " + p.str() + " does not begin with an ascent");
    if (auto occ = first_occurrence(p, kContiguous132); !occ.empty())
      throw std::domain_error("permutation " + p.str() + " contains 132 at position " +
                              std::to_string(occ[0]));
  }
  return IncreasingTrimmedTree(build_subtree(0, std::span<const int>(p.letters())));
}

namespace {

void emit_subtrees(const TreeNode& node, std::vector<int>& out) {
  for (const auto& c : node.children) {
    emit_subtrees(c, out);
    out.push_back(c.label);
  }
}

}  // namespace

Permutation tree_to_perm(const IncreasingTrimmedTree& t) {
  std::vector<int> out;
  out.reserve(t.node_count() - 1);
  emit_subtrees(t.root(), out);
  return Permutation(std::move(out));
}

namespace {

// Walk every parent assignment (parent of i is any label below i); keep
// the assignments in which no node's only child is a leaf.
void irtt_rec(int n, int next, std::vector<int>& parent,
              const std::function<void(const std::vector<int>&)>& fn) {
  if (next > n) {
    fn(parent);
    return;
  }
  for (int p = 0; p < next; ++p) {
    parent[next] = p;
    irtt_rec(n, next + 1, parent, fn);
  }
}

bool is_trimmed(int n, const std::vector<int>& parent) {
  std::vector<int> child_count(n + 1, 0), only_child(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    ++child_count[parent[i]];
    only_child[parent[i]] = i;
  }
  for (int v = 0; v <= n; ++v)
    if (child_count[v] == 1 && child_count[only_child[v]] == 0) return false;
  return true;
}

TreeNode assemble(int n, const std::vector<int>& parent) {
  std::vector<TreeNode> nodes(n + 1);
  for (int v = 0; v <= n; ++v) nodes[v].label = v;
  for (int i = n; i >= 1; --i) nodes[parent[i]].children.push_back(std::move(nodes[i]));
  for (auto& node : nodes) std::reverse(node.children.begin(), node.children.end());
  return std::move(nodes[0]);
}

}  // namespace

void for_each_irtt(int node_count, const std::function<void(const IncreasingTrimmedTree&)>& fn) {
  if (node_count < 1) throw std::domain_error("a tree needs at least the root");
  const int n = node_count - 1;
  std::vector<int> parent(n + 1, -1);
  irtt_rec(n, 1, parent, [&](const std::vector<int>& par) {
    if (is_trimmed(n, par)) fn(IncreasingTrimmedTree(assemble(n, par)));
  });
}

BigCount count_irtt(int node_count) {
  if (node_count < 1) throw std::domain_error("a tree needs at least the root");
  const int n = node_count - 1;
  BigCount total = 0;
  std::vector<int> parent(n + 1, -1);
  irtt_rec(n, 1, parent, [&](const std::vector<int>& par) {
    if (is_trimmed(n, par)) ++total;
  });
  return total;
}

}  // namespace gpavoid
