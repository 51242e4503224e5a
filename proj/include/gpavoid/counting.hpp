#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gpavoid/numeric.hpp"
#include "gpavoid/pattern.hpp"
#include "gpavoid/perm.hpp"

namespace gpavoid {

inline constexpr int kDefaultBruteCap = 10;

// "How many n-permutations avoid `avoided` and satisfy `constraint`?"
struct CountQuery {
  GeneralizedPattern avoided;
  BoundaryConstraint constraint;
  int n = 0;
};

// Exhaustive generation with prefix pruning: a prefix that already ends
// an occurrence of the avoided pattern, or already breaks a begin
// constraint, is never extended. Throws std::domain_error when n exceeds
// the cap; the message carries the cap value.
BigCount brute_count(const CountQuery& q, int cap = kDefaultBruteCap);

// The witnesses themselves, in lexicographic order.
void for_each_witness(const CountQuery& q, const std::function<void(const Permutation&)>& fn,
                      int cap = kDefaultBruteCap);
std::vector<Permutation> brute_enumerate(const CountQuery& q, int cap = kDefaultBruteCap);

// ---------------------------------------------------------------------
// Coefficient recurrences, one table per 3-pattern family. Tables are
// built bottom-up in n and immutable afterwards. Counts with k >= 2 and
// n < k are zero throughout.

// Avoid contiguous 132. E[k][n] = permutations beginning with an
// increasing run of length >= k (E[1] is unrestricted avoidance);
// R[k][n] = beginning with a decreasing run, k >= 2.
struct F132Table {
  int n_max = 0;
  int k_max = 0;
  std::vector<std::vector<BigCount>> E;  // E[k][n], 1 <= k <= k_max
  std::vector<std::vector<BigCount>> R;  // R[k][n], 2 <= k <= k_max
};

// Avoid contiguous 123. P[k][n] = beginning with a decreasing run of
// length >= k (P[1] unrestricted); begin12[n] = beginning with an
// ascent. Beginning with an increasing run of length >= 3 is impossible.
struct F123Table {
  int n_max = 0;
  int k_max = 0;
  std::vector<std::vector<BigCount>> P;
  std::vector<BigCount> begin12;
};

// Avoid contiguous 213. A = unrestricted, D = ending with an ascent
// (both imported from the 132 family through reverse-complement).
// B_inc/C_inc: beginning with an increasing run of length >= k, C also
// ending with an ascent. B_dec/C_dec: the decreasing-run orientation,
// with B_dec[1] = A and C_dec[1] = D.
struct F213Table {
  int n_max = 0;
  int k_max = 0;
  std::vector<BigCount> A, D;
  std::vector<std::vector<BigCount>> B_inc, C_inc;
  std::vector<std::vector<BigCount>> B_dec, C_dec;
};

F132Table build_f132(int n_max, int k_max);
F123Table build_f123(int n_max, int k_max);
F213Table build_f213(int n_max, int k_max);

// ---------------------------------------------------------------------
// The six symmetry classes of (contiguous 3-pattern, placement,
// direction) triples. Each class holds four triples and is closed under
// the trivial bijections; `to_representative` carries a query onto the
// class representative, which is always begin-oriented:
//   row 1: (123, begin, increasing)   row 2: (123, begin, decreasing)
//   row 3: (132, begin, increasing)   row 4: (132, begin, decreasing)
//   row 5: (213, begin, increasing)   row 6: (213, begin, decreasing)
struct RowClass {
  int row = 0;
  Symmetry to_representative = Symmetry::identity;
};

// Requires a contiguous 3-pattern; throws std::invalid_argument for
// dashed or longer patterns.
RowClass classify(const GeneralizedPattern& avoided, const BoundaryConstraint& c);

CountQuery representative_query(int row, int k, int n);

enum class CountMethod { brute, recurrence, series };
CountMethod count_method_from_string(const std::string& s);
std::string to_string(CountMethod m);

// The count for any member query of a row at (n, k), by the requested
// method. The three methods agree; brute force is the ground truth, the
// recurrences are the fast path, the series route cross-checks both.
BigCount table_count(int row, int k, int n, CountMethod method, int brute_cap = kDefaultBruteCap);

}  // namespace gpavoid
