#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "gpavoid/counting.hpp"
#include "gpavoid/trees.hpp"

using namespace gpavoid;

namespace {

const char* kFigureTreeJson =
    R"({"label":0,"children":[)"
    R"({"label":1,"children":[{"label":2,"children":[]},{"label":3,"children":[)"
    R"({"label":5,"children":[{"label":9,"children":[]},{"label":10,"children":[]}]}]}]},)"
    R"({"label":4,"children":[{"label":7,"children":[{"label":8,"children":[)"
    R"({"label":11,"children":[]},{"label":13,"children":[]},{"label":14,"children":[]}]},)"
    R"({"label":12,"children":[]}]}]},)"
    R"({"label":6,"children":[]}]})";

const char* kFigurePerm = "2 9 10 5 3 1 11 13 14 8 12 7 4 6";

}  // namespace

TEST_CASE("the figure example maps both ways") {
  const Permutation p = Permutation::parse(kFigurePerm);
  const IncreasingTrimmedTree t = perm_to_tree(p);
  CHECK(t.node_count() == 15);
  REQUIRE(t.root().children.size() == 3);
  CHECK(t.root().children[0].label == 1);
  CHECK(t.root().children[1].label == 4);
  CHECK(t.root().children[2].label == 6);
  CHECK(t.to_json().dump() == kFigureTreeJson);
  CHECK(tree_to_perm(t) == p);
  CHECK(IncreasingTrimmedTree::from_json(nlohmann::json::parse(kFigureTreeJson)) == t);
}

TEST_CASE("small worked examples") {
  const IncreasingTrimmedTree two_leaves = perm_to_tree(Permutation::parse("12"));
  CHECK(two_leaves.to_json().dump() ==
        R"({"label":0,"children":[{"label":1,"children":[]},{"label":2,"children":[]}]})");
  CHECK(tree_to_perm(two_leaves).str() == "1 2");

  const IncreasingTrimmedTree three_leaves = perm_to_tree(Permutation::parse("123"));
  CHECK(three_leaves.root().children.size() == 3);
  CHECK(tree_to_perm(three_leaves).str() == "1 2 3");

  CHECK(tree_to_perm(IncreasingTrimmedTree::single_root()).empty());
  CHECK(perm_to_tree(Permutation()) == IncreasingTrimmedTree::single_root());
}

TEST_CASE("domain violations are rejected") {
  CHECK_THROWS_WITH_AS(perm_to_tree(Permutation::parse("132")), doctest::Contains("132"),
                       std::domain_error);
  CHECK_THROWS_WITH_AS(perm_to_tree(Permutation::parse("21")), doctest::Contains("ascent"),
                       std::domain_error);
  CHECK_THROWS_AS(perm_to_tree(Permutation::parse("1")), std::domain_error);
}

TEST_CASE("invariant violations name the offending node") {
  // 0 - 1 - 2 is a limb of length two: node 1 has a single leaf child.
  TreeNode limb{0, {TreeNode{1, {TreeNode{2, {}}}}}};
  CHECK_THROWS_WITH_AS(IncreasingTrimmedTree(std::move(limb)), doctest::Contains("node 1"),
                       std::invalid_argument);
  TreeNode decreasing{0, {TreeNode{2, {TreeNode{1, {}}, TreeNode{3, {}}}}}};
  CHECK_THROWS_WITH_AS(IncreasingTrimmedTree(std::move(decreasing)), doctest::Contains("1"),
                       std::invalid_argument);
  TreeNode bad_root{1, {}};
  CHECK_THROWS_AS(IncreasingTrimmedTree(std::move(bad_root)), std::invalid_argument);
  TreeNode repeated{0, {TreeNode{1, {}}, TreeNode{1, {}}}};
  CHECK_THROWS_AS(IncreasingTrimmedTree(std::move(repeated)), std::invalid_argument);
  // A single internal child is fine when its own children are siblings.
  const TreeNode chain{0, {TreeNode{1, {TreeNode{2, {}}, TreeNode{3, {}}}}}};
  CHECK(IncreasingTrimmedTree(chain).node_count() == 4);
}

TEST_CASE("tree counts by exhaustive construction") {
  CHECK(count_irtt(1) == 1);  // the bare root
  CHECK(count_irtt(2) == 0);  // the only shape is a limb
  CHECK(count_irtt(3) == 1);  // the star
  CHECK(count_irtt(4) == 2);  // the star and 0-1-{2,3}
  CHECK_THROWS_AS(count_irtt(0), std::domain_error);
  for (int nodes = 1; nodes <= 7; ++nodes) {
    BigCount streamed = 0;
    for_each_irtt(nodes, [&](const IncreasingTrimmedTree&) { ++streamed; });
    CHECK(streamed == count_irtt(nodes));
  }
}

TEST_CASE("round trips from the tree side") {
  const GeneralizedPattern g = GeneralizedPattern::parse("132");
  for (int nodes = 1; nodes <= 7; ++nodes) {
    for_each_irtt(nodes, [&](const IncreasingTrimmedTree& t) {
      const Permutation p = tree_to_perm(t);
      CHECK(p.size() == nodes - 1);
      if (!p.empty()) {
        CHECK(avoids(p, g));
        CHECK(boundary_satisfies(p, {Placement::begin, Direction::increasing, 2}));
      }
      CHECK(perm_to_tree(p) == t);
    });
  }
}

TEST_CASE("counts match the constrained avoiders") {
  for (int n = 1; n <= 7; ++n) {
    const CountQuery q{GeneralizedPattern::parse("132"),
                       BoundaryConstraint{Placement::begin, Direction::increasing, 2}, n};
    CHECK(count_irtt(n + 1) == brute_count(q));
  }
}
