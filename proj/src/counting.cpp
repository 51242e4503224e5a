#include "gpavoid/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gpavoid/series.hpp"

namespace gpavoid {

namespace {

struct BruteScan {
  const CountQuery& q;
  const std::function<void(const Permutation&)>* sink = nullptr;
  BigCount count = 0;
  std::vector<int> word;
  std::vector<bool> used;

  explicit BruteScan(const CountQuery& query) : q(query), used(query.n + 1, false) {
    word.reserve(query.n);
  }

  // A begin constraint is decided letter by letter while the prefix is
  // still inside the first k positions.
  bool begin_prefix_ok() const {
    const auto& c = q.constraint;
    if (c.k < 2 || c.placement != Placement::begin) return true;
    const int j = static_cast<int>(word.size()) - 1;
    if (j < 1 || j > c.k - 1) return true;
    const bool ascent = word[j - 1] < word[j];
    return ascent == (c.direction == Direction::increasing);
  }

  void run() {
    if (static_cast<int>(word.size()) == q.n) {
      if (boundary_satisfies(Permutation(word), q.constraint)) {
        ++count;
        if (sink) (*sink)(Permutation(word));
      }
      return;
    }
    for (int v = 1; v <= q.n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      word.push_back(v);
      if (begin_prefix_ok() &&
          !word_has_occurrence_ending_at(word, q.avoided, static_cast<int>(word.size()) - 1))
        run();
      word.pop_back();
      used[v] = false;
    }
  }
};

void check_cap(const CountQuery& q, int cap) {
  if (q.n < 0) throw std::domain_error("counting query needs n >= 0");
  if (q.constraint.k < 1) throw std::domain_error("counting query needs k >= 1");
  if (q.n > cap)
    throw std::domain_error("brute force refused: n = " + std::to_string(q.n) +
                            " exceeds the configured cap " + std::to_string(cap));
}

}  // namespace

BigCount brute_count(const CountQuery& q, int cap) {
  check_cap(q, cap);
  BruteScan scan(q);
  scan.run();
  return scan.count;
}

void for_each_witness(const CountQuery& q, const std::function<void(const Permutation&)>& fn,
                      int cap) {
  check_cap(q, cap);
  BruteScan scan(q);
  scan.sink = &fn;
  scan.run();
}

std::vector<Permutation> brute_enumerate(const CountQuery& q, int cap) {
  std::vector<Permutation> out;
  for_each_witness(q, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

// -----------------------------------------------------------------------
// Recurrence tables. Bootstrapping note for the 132 family: the generic
// step is only sound for k != 2, so the k = 2 column is obtained jointly
// with the k = 1 column. Per step n -> n+1, in order:
//   E[1][n+1] = sum_i C(n,i) E[2][i] E[1][n-i] + n E[1][n-1] + E[1][n]
//   R[2][n+1] by the decreasing-run step below
//   E[2][n+1] = E[1][n+1] - R[2][n+1]
// (every permutation of length >= 2 begins with exactly one of an ascent
// or a descent; lengths 0 and 1 stay zero).

namespace {

// Shared shape of the decreasing-run recurrences: the step for X[n+1]
// from columns X (= counts beginning with a decreasing k-run) and Y
// (= counts ending, after reversal arguments, with an ascent):
//   X[n+1] = X[n] + n X[n-1] + sum_i C(n,i) X[i] Y[n-i] + C(n,k-1) Y[n-k+1]
// The closed step undercounts when the letter 1 sits in the k-th
// position of a short permutation: add 1 at n = k-1 and n at n = k.
BigCount decreasing_run_step(const std::vector<BigCount>& X, const std::vector<BigCount>& Y,
                             int n, int k) {
  BigCount out = X[n];
  if (n >= 1) out += BigCount(n) * X[n - 1];
  for (int i = 0; i <= n; ++i) out += binomial(n, i) * X[i] * Y[n - i];
  if (n - k + 1 >= 0) out += binomial(n, k - 1) * Y[n - k + 1];
  if (n == k - 1) out += 1;
  if (n == k) out += n;
  return out;
}

}  // namespace

F132Table build_f132(int n_max, int k_max) {
  if (n_max < 0 || k_max < 2) throw std::domain_error("build_f132 needs n_max >= 0, k_max >= 2");
  F132Table t;
  t.n_max = n_max;
  t.k_max = k_max;
  t.E.assign(k_max + 1, std::vector<BigCount>(n_max + 1, 0));
  t.R.assign(k_max + 1, std::vector<BigCount>(n_max + 1, 0));
  t.E[1][0] = 1;
  if (n_max >= 1) t.E[1][1] = 1;
  for (int n = 1; n < n_max; ++n) {
    BigCount e = t.E[1][n] + BigCount(n) * t.E[1][n - 1];
    for (int i = 0; i <= n; ++i) e += binomial(n, i) * t.E[2][i] * t.E[1][n - i];
    t.E[1][n + 1] = e;
    t.R[2][n + 1] = decreasing_run_step(t.R[2], t.E[2], n, 2);
    t.E[2][n + 1] = t.E[1][n + 1] - t.R[2][n + 1];
  }
  for (int k = 3; k <= k_max; ++k) {
    for (int n = 0; n < n_max; ++n) {
      BigCount e = t.E[k - 1][n] + t.E[k][n];
      if (n >= 1) e += BigCount(n) * t.E[k][n - 1];
      for (int i = 0; i <= n; ++i) e += binomial(n, i) * t.E[k][i] * t.E[2][n - i];
      t.E[k][n + 1] = e;
      t.R[k][n + 1] = decreasing_run_step(t.R[k], t.E[2], n, k);
    }
  }
  return t;
}

F123Table build_f123(int n_max, int k_max) {
  if (n_max < 0 || k_max < 2) throw std::domain_error("build_f123 needs n_max >= 0, k_max >= 2");
  F123Table t;
  t.n_max = n_max;
  t.k_max = k_max;
  t.P.assign(k_max + 1, std::vector<BigCount>(n_max + 1, 0));
  t.begin12.assign(n_max + 1, 0);
  // The k = 2 column is self-contained; the k = 1 column convolves
  // against it; higher k feed on the k = 2 column as well.
  for (int n = 0; n < n_max; ++n) t.P[2][n + 1] = decreasing_run_step(t.P[2], t.P[2], n, 2);
  t.P[1][0] = 1;
  for (int n = 0; n < n_max; ++n) {
    BigCount p = t.P[1][n];
    if (n >= 1) p += BigCount(n) * t.P[1][n - 1];
    for (int i = 0; i <= n; ++i) p += binomial(n, i) * t.P[2][i] * t.P[1][n - i];
    t.P[1][n + 1] = p;
  }
  for (int k = 3; k <= k_max; ++k)
    for (int n = 0; n < n_max; ++n) t.P[k][n + 1] = decreasing_run_step(t.P[k], t.P[2], n, k);
  for (int n = 2; n <= n_max; ++n) t.begin12[n] = t.P[1][n] - t.P[2][n];
  return t;
}

F213Table build_f213(int n_max, int k_max) {
  if (n_max < 0 || k_max < 2) throw std::domain_error("build_f213 needs n_max >= 0, k_max >= 2");
  F213Table t;
  t.n_max = n_max;
  t.k_max = k_max;
  // Unrestricted avoiders and end-with-ascent avoiders transport from the
  // 132 family through reverse/complement.
  F132Table f132 = build_f132(n_max, 2);
  t.A = std::move(f132.E[1]);
  t.D = std::move(f132.E[2]);
  t.B_inc.assign(k_max + 1, std::vector<BigCount>(n_max + 1, 0));
  t.C_inc.assign(k_max + 1, std::vector<BigCount>(n_max + 1, 0));
  t.B_dec.assign(k_max + 1, std::vector<BigCount>(n_max + 1, 0));
  t.C_dec.assign(k_max + 1, std::vector<BigCount>(n_max + 1, 0));
  for (int k = 2; k <= k_max; ++k) {
    for (int n = 0; n < n_max; ++n) {
      BigCount c = t.C_inc[k][n];
      for (int i = 0; i <= n; ++i) c += binomial(n, i) * t.C_inc[k][i] * t.D[n - i];
      if (n - k + 1 >= 0) c += binomial(n, k - 1) * t.D[n - k + 1];
      if (n == k - 1) c += 1;  // the increasing identity word of length k
      t.C_inc[k][n + 1] = c;
      BigCount b = 0;
      for (int i = 0; i <= n; ++i) b += binomial(n, i) * t.C_inc[k][i] * t.A[n - i];
      if (n - k + 1 >= 0) b += binomial(n, k - 1) * t.A[n - k + 1];
      t.B_inc[k][n + 1] = b;
    }
  }
  t.B_dec[1] = t.A;
  t.C_dec[1] = t.D;
  for (int k = 2; k <= k_max; ++k) {
    for (int n = 0; n < n_max; ++n) {
      BigCount c = t.C_dec[k][n] + t.C_dec[k - 1][n];
      for (int i = 0; i <= n; ++i) c += binomial(n, i) * t.C_dec[k][i] * t.D[n - i];
      t.C_dec[k][n + 1] = c;
      BigCount b = t.B_dec[k - 1][n];
      for (int i = 0; i <= n; ++i) b += binomial(n, i) * t.C_dec[k][i] * t.A[n - i];
      if (n == 0 && k == 2) b -= 1;  // the step would count the single letter as a descent start
      t.B_dec[k][n + 1] = b;
    }
  }
  return t;
}

// -----------------------------------------------------------------------

namespace {

const std::map<std::string, int>& representative_rows() {
  // Keyed by pattern string + placement(begin) + direction.
  static const std::map<std::string, int> rows = {
      {"123+increasing", 1}, {"123+decreasing", 2}, {"132+increasing", 3},
      {"132+decreasing", 4}, {"213+increasing", 5}, {"213+decreasing", 6},
  };
  return rows;
}

std::string representative_pattern(int row) {
  switch (row) {
    case 1: case 2: return "123";
    case 3: case 4: return "132";
    case 5: case 6: return "213";
    default: throw std::invalid_argument("row must be 1..6");
  }
}

Direction representative_direction(int row) {
  return row % 2 == 1 ? Direction::increasing : Direction::decreasing;
}

}  // namespace

RowClass classify(const GeneralizedPattern& avoided, const BoundaryConstraint& c) {
  if (avoided.length() != 3 || !avoided.contiguous())
    throw std::invalid_argument("only contiguous 3-letter patterns classify into the table; '" +
                                avoided.str() + "' does not");
  for (Symmetry s : {Symmetry::identity, Symmetry::reverse, Symmetry::complement,
                     Symmetry::reverse_complement}) {
    const GeneralizedPattern moved = avoided.transformed(s);
    const BoundaryConstraint moved_c = transport(c, s);
    if (moved_c.placement != Placement::begin) continue;
    const auto it =
        representative_rows().find(moved.str() + "+" + to_string(moved_c.direction));
    if (it != representative_rows().end()) return RowClass{it->second, s};
  }
  throw std::invalid_argument("pattern '" + avoided.str() + "' has no table row");
}

CountQuery representative_query(int row, int k, int n) {
  return CountQuery{GeneralizedPattern::parse(representative_pattern(row)),
                    BoundaryConstraint{Placement::begin, representative_direction(row), k}, n};
}

CountMethod count_method_from_string(const std::string& s) {
  if (s == "brute") return CountMethod::brute;
  if (s == "recurrence") return CountMethod::recurrence;
  if (s == "series") return CountMethod::series;
  throw std::invalid_argument("unknown method '" + s + "'");
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::recurrence: return "recurrence";
    case CountMethod::series: return "series";
  }
  return "?";
}

namespace {

// Sealed tables shared between repeated lookups; grown when a larger
// bound is requested.
std::mutex g_tables_mutex;
F132Table g_f132;
F123Table g_f123;
F213Table g_f213;

void ensure_tables(int n, int k) {
  // Grow monotonically so alternating n/k requests never shrink a table.
  const int n_need = std::max(n, 1);
  const int k_need = std::max(k, 2);
  if (g_f132.n_max < n_need || g_f132.k_max < k_need) {
    const int n_new = std::max(n_need, g_f132.n_max);
    const int k_new = std::max(k_need, g_f132.k_max);
    g_f132 = build_f132(n_new, k_new);
    g_f123 = build_f123(n_new, k_new);
    g_f213 = build_f213(n_new, k_new);
  }
}

BigCount recurrence_count(int row, int k, int n) {
  std::lock_guard lock(g_tables_mutex);
  ensure_tables(n, k);
  switch (row) {
    case 1:
      if (k == 1) return g_f123.P[1][n];
      if (k == 2) return g_f123.begin12[n];
      return 0;  // an increasing prefix of length >= 3 is itself an occurrence
    case 2:
      return g_f123.P[k][n];
    case 3:
      return g_f132.E[k][n];
    case 4:
      return k == 1 ? g_f132.E[1][n] : g_f132.R[k][n];
    case 5:
      return k == 1 ? g_f132.E[1][n] : g_f213.B_inc[k][n];
    case 6:
      return k == 1 ? g_f213.B_dec[1][n] : g_f213.B_dec[k][n];
    default:
      throw std::invalid_argument("row must be 1..6");
  }
}

}  // namespace

BigCount table_count(int row, int k, int n, CountMethod method, int brute_cap) {
  if (row < 1 || row > 6) throw std::invalid_argument("row must be 1..6");
  if (k < 1) throw std::domain_error("table_count needs k >= 1");
  if (n < 0) throw std::domain_error("table_count needs n >= 0");
  switch (method) {
    case CountMethod::brute:
      return brute_count(representative_query(row, k, n), brute_cap);
    case CountMethod::recurrence:
      return recurrence_count(row, k, n);
    case CountMethod::series: {
      const PowerSeries s = egf_table(row, k, std::max(n, k));
      return egf_count(s, n);
    }
  }
  throw std::invalid_argument("bad method");
}

}  // namespace gpavoid
