#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "gpavoid/partitions.hpp"
#include "gpavoid/pattern.hpp"

using namespace gpavoid;

namespace {

// Independent oracle: enumerate set partitions of {1..n} as restricted
// growth strings, a different scheme from the library's block-insertion
// recursion.
template <typename Fn>
void for_each_rgs(int n, Fn fn) {
  std::vector<int> rgs(n, 0);
  const std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      fn(rgs);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(max_used, b));
    }
  };
  if (n == 0)
    fn(rgs);
  else
    rec(0, -1);
}

BigCount rgs_bell(int n) {
  BigCount total = 0;
  for_each_rgs(n, [&](const std::vector<int>&) { ++total; });
  return total;
}

BigCount rgs_stirling(int n, int k) {
  BigCount total = 0;
  for_each_rgs(n, [&](const std::vector<int>& rgs) {
    const int blocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (blocks == k) ++total;
  });
  return total;
}

// Brute-force count of n-permutations avoiding 1-32 that end with an
// increasing k-run, straight over next_permutation.
BigCount naive_p_count(int n, int k) {
  const GeneralizedPattern g = GeneralizedPattern::parse("1-32");
  const BoundaryConstraint c{Placement::end, Direction::increasing, k};
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  BigCount total = 0;
  do {
    const Permutation p(letters);
    if (avoids(p, g) && boundary_satisfies(p, c)) ++total;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return total;
}

}  // namespace

TEST_CASE("bell numbers against the restricted-growth-string oracle") {
  CHECK(bell(0) == 1);
  CHECK(bell(4) == 15);
  CHECK(bell(5) == 52);
  for (int n = 0; n <= 8; ++n) CHECK(bell(n) == rgs_bell(n));
  CHECK_THROWS_AS(bell(-1), std::domain_error);
}

TEST_CASE("stirling numbers against the oracle") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(6, 6) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(0, 0) == 1);
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n + 1; ++k) CHECK(stirling2(n, k) == rgs_stirling(n, k));
  CHECK_THROWS_AS(stirling2(-1, 0), std::domain_error);
  CHECK_THROWS_AS(stirling2(3, -2), std::domain_error);
}

TEST_CASE("bell through its recurrence equals the stirling row sums") {
  for (int n = 0; n <= 30; ++n) {
    BigCount row_sum = 0;
    for (int k = 0; k <= n; ++k) row_sum += stirling2(n, k);
    CHECK(bell(n) == row_sum);
  }
}

TEST_CASE("the closed count formula") {
  CHECK(p_count_formula(4, 2) == 10);
  CHECK(p_count_formula(4, 1) == 15);  // equals bell(4)
  for (int k = 1; k <= 6; ++k) CHECK(p_count_formula(k, k) == 1);
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) CHECK(p_count_formula(n, k) == naive_p_count(n, k));
  CHECK_THROWS_AS(p_count_formula(3, 4), std::domain_error);
  CHECK_THROWS_AS(p_count_formula(0, 1), std::domain_error);
}

TEST_CASE("both identity sides agree and match the enumeration") {
  CHECK(lemma2_sides(0) == std::pair<BigCount, BigCount>{0, 0});
  CHECK(lemma2_sides(1) == std::pair<BigCount, BigCount>{1, 1});
  CHECK(lemma2_sides(4) == std::pair<BigCount, BigCount>{37, 37});
  for (int n = 0; n <= 20; ++n) {
    const auto [lhs, rhs] = lemma2_sides(n);
    CHECK(lhs == rhs);
  }
  for (int m = 1; m <= 7; ++m) {
    BigCount enumerated = 0;
    for_each_marked_partition(m, [&](const MarkedPartition&) { ++enumerated; });
    CHECK(enumerated == lemma2_sides(m).second);
  }
}

TEST_CASE("marked partition enumeration") {
  CHECK(marked_partitions(1).size() == 1);
  CHECK(marked_partitions(3).size() == 10);
  CHECK(marked_partitions(4).size() == 37);
  CHECK_THROWS_AS(marked_partitions(0), std::domain_error);
  // Canonical order throughout: decreasing minima, sorted blocks, 1 last.
  std::set<MarkedPartition> distinct;
  for (const auto& pp : marked_partitions(5)) {
    CHECK(pp.blocks().back().front() == 1);
    for (int i = 0; i + 1 < pp.block_count(); ++i)
      CHECK(pp.blocks()[i].front() > pp.blocks()[i + 1].front());
    for (const auto& b : pp.blocks()) CHECK(std::is_sorted(b.begin(), b.end()));
    distinct.insert(pp);
  }
  CHECK(distinct.size() == marked_partitions(5).size());
}

TEST_CASE("marked partition JSON is canonical and bit-exact") {
  const MarkedPartition pp({{4}, {2, 3}, {1}}, 1);
  CHECK(pp.to_json().dump() == R"({"blocks":[[4],[2,3],[1]],"marked":1})");
  CHECK(MarkedPartition::from_json(nlohmann::json::parse(pp.to_json().dump())) == pp);
  // Input in a scrambled block order is rejected rather than quietly fixed.
  CHECK_THROWS_AS(
      MarkedPartition::from_json(nlohmann::json::parse(R"({"blocks":[[1],[2,3],[4]],"marked":1})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      MarkedPartition::from_json(nlohmann::json::parse(R"({"blocks":[[1],[2,3]],"marked":0})")),
      std::invalid_argument);
  // The constructor normalizes arbitrary block order.
  CHECK(MarkedPartition({{1}, {4}, {2, 3}}, 2) == pp);
}

TEST_CASE("size conditions for the correspondence") {
  const MarkedPartition a({{4}, {2, 3}, {1}}, 1);  // 4 | 23* | 1
  CHECK(thm4_is_valid(a, 3));                      // condition 3, |marked| = 2 >= 2
  const MarkedPartition b({{4}, {2, 3}, {1}}, 2);  // 4 | 23 | 1*
  CHECK_FALSE(thm4_is_valid(b, 3));                // condition 1, |last| = 1 < 2
  for (const auto& pp : marked_partitions(5)) CHECK(thm4_is_valid(pp, 2));
  CHECK_THROWS_AS(thm4_is_valid(a, 1), std::domain_error);
  // A single block is both first and last; the last-subset condition governs.
  CHECK(thm4_is_valid(MarkedPartition({{1, 2}}, 0), 3));
  CHECK_FALSE(thm4_is_valid(MarkedPartition({{1, 2}}, 0), 4));
}

TEST_CASE("the worked partition-to-permutation examples") {
  CHECK(partition_to_perm(MarkedPartition({{4}, {2, 3}, {1}}, 1), 2).str() == "5 4 1 2 3");
  CHECK(partition_to_perm(MarkedPartition({{5}, {3, 4}, {1, 2}}, 1), 2).str() == "5 3 4 6 1 2");
  CHECK(partition_to_perm(MarkedPartition({{5}, {2, 3, 4}, {1}}, 2), 2).str() == "5 2 3 4 1 6");
  CHECK(perm_to_partition(Permutation::parse("54123"), 2) ==
        MarkedPartition({{4}, {2, 3}, {1}}, 1));
  CHECK(perm_to_partition(Permutation::parse("5 3 4 6 1 2"), 2) ==
        MarkedPartition({{5}, {3, 4}, {1, 2}}, 1));
  CHECK(perm_to_partition(Permutation::parse("5 2 3 4 1 6"), 2) ==
        MarkedPartition({{5}, {2, 3, 4}, {1}}, 2));
}

TEST_CASE("rejections carry the reason") {
  // 4 | 23 | 1* violates condition 1 at k = 3.
  CHECK_THROWS_WITH_AS(partition_to_perm(MarkedPartition({{4}, {2, 3}, {1}}, 2), 3),
                       doctest::Contains("condition 1"), std::domain_error);
  CHECK_THROWS_WITH_AS(perm_to_partition(Permutation::parse("132"), 2),
                       doctest::Contains("1-32"), std::domain_error);
  CHECK_THROWS_WITH_AS(perm_to_partition(Permutation::parse("321"), 2),
                       doctest::Contains("increasing run"), std::domain_error);
  CHECK_THROWS_AS(perm_to_partition(Permutation::parse("1"), 2), std::domain_error);
}

TEST_CASE("round trips over every valid marked partition") {
  const GeneralizedPattern g = GeneralizedPattern::parse("1-32");
  for (int m = 1; m <= 8; ++m) {
    for (int k = 2; k <= 4; ++k) {
      const BoundaryConstraint c{Placement::end, Direction::increasing, k};
      std::set<Permutation> images;
      for (const auto& pp : marked_partitions(m)) {
        if (!thm4_is_valid(pp, k)) continue;
        const Permutation image = partition_to_perm(pp, k);
        CHECK(image.size() == m + 1);
        CHECK(avoids(image, g));
        CHECK(boundary_satisfies(image, c));
        CHECK(images.insert(image).second);
        CHECK(perm_to_partition(image, k) == pp);
      }
    }
  }
}
