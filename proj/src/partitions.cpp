#include "gpavoid/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "gpavoid/pattern.hpp"

namespace gpavoid {

namespace {

std::mutex g_bell_mutex;
// Bell triangle rows; row n starts with B_n and ends with B_{n+1}.
std::vector<std::vector<BigCount>> g_bell_triangle;

void grow_bell(int n) {
  if (g_bell_triangle.empty()) g_bell_triangle.push_back({BigCount(1)});
  while (static_cast<int>(g_bell_triangle.size()) <= n) {
    const auto& prev = g_bell_triangle.back();
    std::vector<BigCount> row;
    row.reserve(prev.size() + 1);
    row.push_back(prev.back());
    for (const auto& left : prev) row.push_back(row.back() + left);
    g_bell_triangle.push_back(std::move(row));
  }
}

std::mutex g_stirling_mutex;
std::vector<std::vector<BigCount>> g_stirling;  // g_stirling[n][k], k <= n

void grow_stirling(int n) {
  if (g_stirling.empty()) g_stirling.push_back({BigCount(1)});  // S(0,0) = 1
  while (static_cast<int>(g_stirling.size()) <= n) {
    const int row = static_cast<int>(g_stirling.size());
    const auto& prev = g_stirling.back();
    std::vector<BigCount> r(row + 1);
    r[0] = 0;
    for (int k = 1; k <= row; ++k) {
      r[k] = (k < row ? BigCount(k) * prev[k] : BigCount(0));
      r[k] += prev[k - 1];
    }
    g_stirling.push_back(std::move(r));
  }
}

}  // namespace

BigCount bell(int n) {
  if (n < 0) throw std::domain_error("bell: n must be non-negative");
  std::lock_guard lock(g_bell_mutex);
  grow_bell(n);
  return g_bell_triangle[n].front();
}

BigCount stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("stirling2: arguments must be non-negative");
  if (k > n) return 0;
  std::lock_guard lock(g_stirling_mutex);
  grow_stirling(n);
  return g_stirling[n][k];
}

BigCount p_count_formula(int n, int k) {
  if (n < 1) throw std::domain_error("p_count_formula: n must be positive");
  if (k < 1 || k > n) throw std::domain_error("p_count_formula: k must satisfy 1 <= k <= n");
  BigCount total = 0;
  for (int i = 0; i <= n - k; ++i) total += binomial(n - 1, i) * bell(i);
  return total;
}

std::pair<BigCount, BigCount> lemma2_sides(int n) {
  if (n < 0) throw std::domain_error("lemma2_sides: n must be non-negative");
  BigCount lhs = 0;
  for (int i = 0; i < n; ++i) lhs += binomial(n, i) * bell(i);
  BigCount rhs = 0;
  for (int i = 0; i <= n; ++i) rhs += BigCount(i) * stirling2(n, i);
  return {lhs, rhs};
}

MarkedPartition::MarkedPartition(std::vector<std::vector<int>> blocks, int marked)
    : blocks_(std::move(blocks)), marked_(marked) {
  if (blocks_.empty()) throw std::invalid_argument("marked partition needs at least one block");
  if (marked_ < 0 || marked_ >= static_cast<int>(blocks_.size()))
    throw std::invalid_argument("marked index out of range");
  int total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("marked partition blocks must be non-empty");
    std::sort(b.begin(), b.end());
    total += static_cast<int>(b.size());
  }
  element_count_ = total;
  // Canonical order: strictly decreasing block minima; track the mark.
  std::vector<int> index(blocks_.size());
  for (size_t i = 0; i < index.size(); ++i) index[i] = static_cast<int>(i);
  std::stable_sort(index.begin(), index.end(),
                   [&](int a, int b) { return blocks_[a].front() > blocks_[b].front(); });
  std::vector<std::vector<int>> ordered;
  ordered.reserve(blocks_.size());
  int new_marked = -1;
  for (size_t i = 0; i < index.size(); ++i) {
    if (index[i] == marked_) new_marked = static_cast<int>(i);
    ordered.push_back(std::move(blocks_[index[i]]));
  }
  blocks_ = std::move(ordered);
  marked_ = new_marked;
  // Cover + disjointness: sorted minima are distinct, so it suffices that
  // all letters are in 1..m and counted once.
  std::vector<bool> seen(element_count_ + 1, false);
  for (const auto& b : blocks_)
    for (int v : b) {
      if (v < 1 || v > element_count_ || seen[v])
        throw std::invalid_argument("blocks must partition {1.." +
                                    std::to_string(element_count_) + "}");
      seen[v] = true;
    }
}

MarkedPartition MarkedPartition::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.contains("marked"))
    throw std::invalid_argument("marked partition JSON needs \"blocks\" and \"marked\"");
  std::vector<std::vector<int>> blocks;
  for (const auto& jb : j.at("blocks")) blocks.push_back(jb.get<std::vector<int>>());
  const int marked = j.at("marked").get<int>();
  MarkedPartition pp(blocks, marked);
  // The wire format is canonical; reject silently reordered input.
  if (pp.blocks() != blocks)
    throw std::invalid_argument(
        "blocks must be listed in canonical order (decreasing minima, sorted letters)");
  return pp;
}

nlohmann::ordered_json MarkedPartition::to_json() const {
  nlohmann::ordered_json j;
  j["blocks"] = blocks_;
  j["marked"] = marked_;
  return j;
}

std::string MarkedPartition::str() const {
  std::string out;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    for (size_t q = 0; q < blocks_[i].size(); ++q) {
      if (q) out += ' ';
      out += std::to_string(blocks_[i][q]);
    }
    if (static_cast<int>(i) == marked_) out += '*';
  }
  return out;
}

namespace {

// Insertion recursion over elements 1..m: element e joins an existing
// block or opens a new one. Blocks appear in creation order (increasing
// minima); the canonical order is its reverse.
void set_partitions_rec(int m, int next, std::vector<std::vector<int>>& blocks,
                        const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  if (next > m) {
    fn(blocks);
    return;
  }
  const size_t existing = blocks.size();  // deeper calls grow the vector
  for (size_t i = 0; i < existing; ++i) {
    blocks[i].push_back(next);
    set_partitions_rec(m, next + 1, blocks, fn);
    blocks[i].pop_back();
  }
  blocks.push_back({next});
  set_partitions_rec(m, next + 1, blocks, fn);
  blocks.pop_back();
}

}  // namespace

void for_each_marked_partition(int m, const std::function<void(const MarkedPartition&)>& fn) {
  if (m < 1) throw std::domain_error("marked partitions need m >= 1");
  std::vector<std::vector<int>> blocks;
  set_partitions_rec(m, 1, blocks, [&](const std::vector<std::vector<int>>& created) {
    std::vector<std::vector<int>> canonical(created.rbegin(), created.rend());
    const int count = static_cast<int>(canonical.size());
    for (int marked = 0; marked < count; ++marked) fn(MarkedPartition(canonical, marked));
  });
}

std::vector<MarkedPartition> marked_partitions(int m) {
  std::vector<MarkedPartition> out;
  for_each_marked_partition(m, [&](const MarkedPartition& pp) { out.push_back(pp); });
  return out;
}

namespace {

// 0 when valid, else the number of the violated size condition.
int thm4_violated_condition(const MarkedPartition& pp, int k) {
  const int last = pp.block_count() - 1;
  const int last_size = static_cast<int>(pp.blocks().back().size());
  if (pp.marked() == last) return last_size >= k - 1 ? 0 : 1;
  if (last_size != 1) return last_size >= k ? 0 : 2;
  return static_cast<int>(pp.marked_block().size()) >= k - 1 ? 0 : 3;
}

}  // namespace

bool thm4_is_valid(const MarkedPartition& pp, int k) {
  if (k < 2) throw std::domain_error("the size conditions are stated for k >= 2");
  return thm4_violated_condition(pp, k) == 0;
}

Permutation partition_to_perm(const MarkedPartition& pp, int k) {
  if (k < 2) throw std::domain_error("partition_to_perm requires k >= 2");
  if (const int cond = thm4_violated_condition(pp, k); cond != 0)
    throw std::domain_error("partition " + pp.str() + " violates size condition " +
                            std::to_string(cond) + " for k=" + std::to_string(k));
  const int n = pp.element_count() + 1;
  const auto& blocks = pp.blocks();
  const int last = pp.block_count() - 1;
  std::vector<int> out;
  out.reserve(n);
  if (blocks.back().size() == 1 && pp.marked() != last) {
    // The final block is an unmarked {1}: lead with n, keep the other
    // unmarked blocks in order, then 1, then the marked block.
    out.push_back(n);
    for (int i = 0; i < last; ++i)
      if (i != pp.marked()) out.insert(out.end(), blocks[i].begin(), blocks[i].end());
    out.push_back(1);
    out.insert(out.end(), pp.marked_block().begin(), pp.marked_block().end());
  } else {
    // Adjoin n to the marked block and read the blocks off in order.
    for (int i = 0; i <= last; ++i) {
      out.insert(out.end(), blocks[i].begin(), blocks[i].end());
      if (i == pp.marked()) out.push_back(n);
    }
  }
  return Permutation(std::move(out));
}

namespace {

std::vector<std::vector<int>> maximal_increasing_runs(const std::vector<int>& word) {
  std::vector<std::vector<int>> runs;
  for (size_t i = 0; i < word.size(); ++i) {
    if (runs.empty() || word[i] < runs.back().back()) runs.push_back({});
    runs.back().push_back(word[i]);
  }
  return runs;
}

}  // namespace

MarkedPartition perm_to_partition(const Permutation& p, int k) {
  if (k < 2) throw std::domain_error("perm_to_partition requires k >= 2");
  const int n = p.size();
  if (n < 2) throw std::domain_error("perm_to_partition requires |p| >= 2");
  static const GeneralizedPattern kPattern132Dashed = GeneralizedPattern::parse("1-32");
  if (auto occ = first_occurrence(p, kPattern132Dashed); !occ.empty())
    throw std::domain_error("permutation " + p.str() + " contains 1-32 at positions " +
                            std::to_string(occ[0]) + "," + std::to_string(occ[1]) + "," +
                            std::to_string(occ[2]));
  if (!boundary_satisfies(p, {Placement::end, Direction::increasing, k}))
    throw std::domain_error("permutation " + p.str() +
                            " does not end with an increasing run of length " + std::to_string(k));
  const auto& w = p.letters();
  std::vector<std::vector<int>> blocks;
  int marked_min = 0;  // minimum of the block to mark, for lookup after sorting
  if (w.front() == n) {
    // p = n T_1 .. 1 T_i: drop n, cut at descents; the run holding 1 is
    // the final run and splits into the block {1} and the marked block.
    std::vector<int> rest(w.begin() + 1, w.end());
    auto runs = maximal_increasing_runs(rest);
    auto& last_run = runs.back();
    if (last_run.front() != 1 || last_run.size() < 2)
      throw std::domain_error("permutation " + p.str() + " is outside the image of the map");
    std::vector<int> marked_block(last_run.begin() + 1, last_run.end());
    marked_min = marked_block.front();
    runs.pop_back();
    blocks = std::move(runs);
    blocks.push_back({1});
    blocks.push_back(std::move(marked_block));
  } else {
    // Cut p at descents; n sits at the end of some run, which is the
    // marked block once n is removed.
    auto runs = maximal_increasing_runs(w);
    for (auto& run : runs) {
      if (run.back() == n) {
        run.pop_back();
        if (run.empty())
          throw std::domain_error("permutation " + p.str() + " is outside the image of the map");
        marked_min = run.front();
      }
    }
    blocks = std::move(runs);
  }
  // Locate the marked block after canonical reordering by its minimum.
  MarkedPartition draft(blocks, 0);
  int marked = -1;
  for (int i = 0; i < draft.block_count(); ++i)
    if (draft.blocks()[i].front() == marked_min) marked = i;
  MarkedPartition result(draft.blocks(), marked);
  if (const int cond = thm4_violated_condition(result, k); cond != 0)
    throw std::domain_error("permutation " + p.str() + " maps to partition " + result.str() +
                            " violating size condition " + std::to_string(cond));
  return result;
}

}  // namespace gpavoid
