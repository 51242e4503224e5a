#pragma once

#include <string>

#include "gpavoid/counting.hpp"

namespace gpavoid {

// Outcome of one verification suite. `counterexample` is empty when ok
// and otherwise identifies the first failing tuple or object.
struct VerifyResult {
  bool ok = true;
  long long checks = 0;
  std::string counterexample;
};

VerifyResult combine(const VerifyResult& a, const VerifyResult& b);

// Three-way agreement brute = recurrence = series coefficient over all
// six rows, k <= k_max, n <= n_max.
VerifyResult verify_table(int n_max, int k_max, int brute_cap = kDefaultBruteCap);

// Every one of the 24 (pattern, placement, direction) triples counts the
// same as its row representative, for n <= n_max and k <= k_max.
VerifyResult verify_symmetry_classes(int n_max, int k_max, int brute_cap = kDefaultBruteCap);

// p_count_formula against exhaustive counts for n <= n_max, k <= k_max
// (grid cells with k > n are checked to count zero exhaustively), plus
// p_count_formula(n, 1) = bell(n) and the unrestricted "1-32" count =
// bell(n).
VerifyResult verify_prop1(int n_max = 9, int k_max = 5, int brute_cap = kDefaultBruteCap);

// Both lemma2_sides agree for 0 <= n <= n_max; for n <= exhaustive_max
// the right side also equals the marked-partition enumeration count.
VerifyResult verify_identity(int n_max = 20, int exhaustive_max = 8);

// Marked-partition bijection: injectivity, image membership, round trip
// and cardinality against brute force, for 2 <= n <= n_max and k in
// {2..k_max}; plus the three fixed examples.
VerifyResult verify_partition_bijection(int n_max = 8, int k_max = 4,
                                        int brute_cap = kDefaultBruteCap);

// Tree bijection: round trip on every witness and cardinality
// count_irtt(n+1) for 1 <= n <= n_max; plus the fixed 14-letter example.
VerifyResult verify_tree_bijection(int n_max = 9, int brute_cap = kDefaultBruteCap);

// Row 1 with k >= 3 vanishes by all three methods for n <= n_max and the
// series is identically zero to `order`.
VerifyResult verify_vanishing(int n_max = 9, int k_hi = 4, int order = 20);

// Every final table EGF has zero radical part and non-negative integer
// counts up to `order`, for all rows and k <= k_max.
VerifyResult verify_field_purity(int k_max = 5, int order = 20);

// The error-function closed forms agree with the integral forms for
// k in {2..k_max}.
VerifyResult verify_erf(int k_max = 5, int order = 20);

// Zero residuals for the differential equations relating the table
// series, checked through `order` - 1.
VerifyResult verify_ode_residuals(int order = 20);

}  // namespace gpavoid
