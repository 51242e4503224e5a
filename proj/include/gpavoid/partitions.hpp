#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gpavoid/numeric.hpp"
#include "gpavoid/perm.hpp"

namespace gpavoid {

// Number of set partitions of an n-element set. Throws std::domain_error
// for n < 0.
BigCount bell(int n);

// Stirling number of the second kind: partitions of an n-set into k
// non-empty blocks. Throws std::domain_error for negative arguments.
BigCount stirling2(int n, int k);

// Number of n-permutations avoiding "1-32" whose last k letters increase:
// sum_{i=0}^{n-k} C(n-1,i) * B_i. Requires n >= 1 and 1 <= k <= n.
BigCount p_count_formula(int n, int k);

// Both sides of the identity sum_{i<n} C(n,i) B_i = sum_i i*S(n,i),
// evaluated by independent code paths (Bell/binomials vs. Stirling row).
std::pair<BigCount, BigCount> lemma2_sides(int n);

// A set partition of {1..m} with exactly one block marked. Blocks are
// kept in canonical order: strictly decreasing minima, so the last block
// contains 1; letters inside a block are sorted increasingly. The marked
// index is 0-based into that order.
class MarkedPartition {
 public:
  // Accepts blocks in any order and normalizes; throws
  // std::invalid_argument unless the blocks partition {1..m} for some m.
  MarkedPartition(std::vector<std::vector<int>> blocks, int marked);

  // Strict form: requires canonical block order as given.
  static MarkedPartition from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  int element_count() const { return element_count_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int marked() const { return marked_; }
  const std::vector<int>& marked_block() const { return blocks_[marked_]; }
  std::string str() const;  // diagnostic form, e.g. "4|23*|1"

  bool operator==(const MarkedPartition&) const = default;
  bool operator<(const MarkedPartition& o) const {
    return blocks_ != o.blocks_ ? blocks_ < o.blocks_ : marked_ < o.marked_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  int marked_ = 0;
  int element_count_ = 0;
};

// Every partition of {1..m}, once per choice of marked block. The total
// number of items is sum_i i*S(m,i). Requires m >= 1.
void for_each_marked_partition(int m, const std::function<void(const MarkedPartition&)>& fn);
std::vector<MarkedPartition> marked_partitions(int m);

// The size conditions under which a marked partition of {1..n-1} maps to
// an n-permutation avoiding "1-32" that ends with an increasing run of
// length >= k. All three conditions degenerate to "non-empty" at k = 2.
bool thm4_is_valid(const MarkedPartition& pp, int k);

// The constructive bijection: a valid marked partition of {1..m} maps to
// a permutation of {1..m+1} that avoids "1-32" and ends with an
// increasing run of length >= k. Throws std::domain_error naming the
// violated size condition when the partition is not valid for k.
Permutation partition_to_perm(const MarkedPartition& pp, int k);

// Exact inverse of partition_to_perm. Requires |p| >= 2, p avoiding
// "1-32" and ending with an increasing run of length >= k; rejections
// name the first offending occurrence or the failed boundary.
MarkedPartition perm_to_partition(const Permutation& p, int k);

}  // namespace gpavoid
