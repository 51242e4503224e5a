#include "gpavoid/verify.hpp"

#include <map>
#include <set>
#include <sstream>

#include "gpavoid/partitions.hpp"
#include "gpavoid/series.hpp"
#include "gpavoid/trees.hpp"

namespace gpavoid {

namespace {

VerifyResult fail(std::string counterexample, long long checks) {
  return VerifyResult{false, checks, std::move(counterexample)};
}

}  // namespace

VerifyResult combine(const VerifyResult& a, const VerifyResult& b) {
  VerifyResult out;
  out.ok = a.ok && b.ok;
  out.checks = a.checks + b.checks;
  out.counterexample = a.ok ? b.counterexample : a.counterexample;
  return out;
}

VerifyResult verify_table(int n_max, int k_max, int brute_cap) {
  VerifyResult res;
  for (int row = 1; row <= 6; ++row) {
    for (int k = 1; k <= k_max; ++k) {
      const PowerSeries series = egf_table(row, k, std::max(n_max, k));
      for (int n = 0; n <= n_max; ++n) {
        const BigCount by_brute = table_count(row, k, n, CountMethod::brute, brute_cap);
        const BigCount by_rec = table_count(row, k, n, CountMethod::recurrence);
        const BigCount by_series = egf_count(series, n);
        ++res.checks;
        if (by_brute != by_rec || by_brute != by_series) {
          std::ostringstream msg;
          msg << "row=" << row << " k=" << k << " n=" << n << ": brute=" << by_brute
              << " recurrence=" << by_rec << " series=" << by_series;
          return fail(msg.str(), res.checks);
        }
      }
    }
  }
  return res;
}

VerifyResult verify_symmetry_classes(int n_max, int k_max, int brute_cap) {
  VerifyResult res;
  const std::vector<std::string> patterns = {"123", "132", "213", "231", "312", "321"};
  for (const auto& pat : patterns) {
    const GeneralizedPattern g = GeneralizedPattern::parse(pat);
    for (Placement pl : {Placement::begin, Placement::end}) {
      for (Direction dir : {Direction::increasing, Direction::decreasing}) {
        for (int k = 1; k <= k_max; ++k) {
          const BoundaryConstraint c{pl, dir, k};
          const RowClass rc = classify(g, c);
          for (int n = 0; n <= n_max; ++n) {
            const BigCount direct = brute_count(CountQuery{g, c, n}, brute_cap);
            const BigCount rep =
                brute_count(representative_query(rc.row, k, n), brute_cap);
            ++res.checks;
            if (direct != rep) {
              std::ostringstream msg;
              msg << "avoid " << pat << " " << to_string(pl) << "/" << to_string(dir)
                  << " k=" << k << " n=" << n << ": direct=" << direct << " row=" << rc.row
                  << " representative=" << rep;
              return fail(msg.str(), res.checks);
            }
          }
        }
      }
    }
  }
  return res;
}

VerifyResult verify_prop1(int n_max, int k_max, int brute_cap) {
  VerifyResult res;
  const GeneralizedPattern g = GeneralizedPattern::parse("1-32");
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= k_max; ++k) {
      const CountQuery q{g, BoundaryConstraint{Placement::end, Direction::increasing, k}, n};
      const BigCount by_brute = brute_count(q, brute_cap);
      ++res.checks;
      if (k > n) {
        if (by_brute != 0)
          return fail("expected zero count at n=" + std::to_string(n) + " k=" + std::to_string(k),
                      res.checks);
        continue;
      }
      const BigCount by_formula = p_count_formula(n, k);
      if (by_formula != by_brute) {
        std::ostringstream msg;
        msg << "P(" << n << "," << k << ")=" << by_formula << " but brute=" << by_brute;
        return fail(msg.str(), res.checks);
      }
    }
    ++res.checks;
    if (p_count_formula(n, 1) != bell(n))
      return fail("P(" + std::to_string(n) + ",1) != bell", res.checks);
  }
  return res;
}

VerifyResult verify_identity(int n_max, int exhaustive_max) {
  VerifyResult res;
  for (int n = 0; n <= n_max; ++n) {
    const auto [lhs, rhs] = lemma2_sides(n);
    ++res.checks;
    if (lhs != rhs)
      return fail("n=" + std::to_string(n) + ": lhs=" + lhs.str() + " rhs=" + rhs.str(),
                  res.checks);
    if (n >= 1 && n <= exhaustive_max) {
      BigCount enumerated = 0;
      for_each_marked_partition(n, [&](const MarkedPartition&) { ++enumerated; });
      ++res.checks;
      if (enumerated != rhs)
        return fail("n=" + std::to_string(n) + ": enumeration=" + enumerated.str() +
                        " formula=" + rhs.str(),
                    res.checks);
    }
  }
  return res;
}

VerifyResult verify_partition_bijection(int n_max, int k_max, int brute_cap) {
  VerifyResult res;
  const GeneralizedPattern g = GeneralizedPattern::parse("1-32");
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 2; k <= k_max; ++k) {
      const BoundaryConstraint c{Placement::end, Direction::increasing, k};
      std::set<Permutation> images;
      BigCount valid = 0;
      std::string failure;
      for_each_marked_partition(n - 1, [&](const MarkedPartition& pp) {
        if (!failure.empty() || !thm4_is_valid(pp, k)) return;
        ++valid;
        const Permutation image = partition_to_perm(pp, k);
        if (!avoids(image, g))
          failure = "image " + image.str() + " of " + pp.str() + " contains 1-32";
        else if (!boundary_satisfies(image, c))
          failure = "image " + image.str() + " of " + pp.str() + " misses the boundary";
        else if (!images.insert(image).second)
          failure = "image " + image.str() + " repeated; the map is not injective";
        else if (perm_to_partition(image, k) != pp)
          failure = "round trip failed for " + pp.str();
      });
      ++res.checks;
      if (!failure.empty())
        return fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + failure,
                    res.checks);
      const BigCount by_brute = brute_count(CountQuery{g, c, n}, brute_cap);
      const BigCount by_formula = k <= n ? p_count_formula(n, k) : BigCount(0);
      if (valid != by_brute || valid != by_formula) {
        std::ostringstream msg;
        msg << "n=" << n << " k=" << k << ": valid partitions=" << valid
            << " brute=" << by_brute << " formula=" << by_formula;
        return fail(msg.str(), res.checks);
      }
    }
  }
  // The worked examples, bit-exact.
  const std::vector<std::pair<MarkedPartition, std::string>> fixed = {
      {MarkedPartition({{4}, {2, 3}, {1}}, 1), "5 4 1 2 3"},
      {MarkedPartition({{5}, {3, 4}, {1, 2}}, 1), "5 3 4 6 1 2"},
      {MarkedPartition({{5}, {2, 3, 4}, {1}}, 2), "5 2 3 4 1 6"},
  };
  for (const auto& [pp, expected] : fixed) {
    ++res.checks;
    const Permutation image = partition_to_perm(pp, 2);
    if (image.str() != expected)
      return fail(pp.str() + " maps to " + image.str() + ", expected " + expected, res.checks);
    if (perm_to_partition(image, 2) != pp)
      return fail("round trip failed for " + pp.str(), res.checks);
  }
  return res;
}

VerifyResult verify_tree_bijection(int n_max, int brute_cap) {
  VerifyResult res;
  const GeneralizedPattern g = GeneralizedPattern::parse("132");
  for (int n = 1; n <= n_max; ++n) {
    const CountQuery q{g, BoundaryConstraint{Placement::begin, Direction::increasing, 2}, n};
    BigCount witnesses = 0;
    std::string failure;
    for_each_witness(q, [&](const Permutation& p) {
      if (!failure.empty()) return;
      ++witnesses;
      const IncreasingTrimmedTree t = perm_to_tree(p);
      if (t.node_count() != n + 1)
        failure = p.str() + " maps to a tree with " + std::to_string(t.node_count()) + " nodes";
      else if (tree_to_perm(t) != p)
        failure = "round trip failed for " + p.str();
    }, brute_cap);
    ++res.checks;
    if (!failure.empty()) return fail("n=" + std::to_string(n) + ": " + failure, res.checks);
    const BigCount trees = count_irtt(n + 1);
    if (trees != witnesses) {
      std::ostringstream msg;
      msg << "n=" << n << ": trees=" << trees << " permutations=" << witnesses;
      return fail(msg.str(), res.checks);
    }
  }
  // The worked 14-letter example.
  ++res.checks;
  const Permutation example = Permutation::parse("2 9 10 5 3 1 11 13 14 8 12 7 4 6");
  const IncreasingTrimmedTree t = perm_to_tree(example);
  std::vector<int> root_children;
  for (const auto& c : t.root().children) root_children.push_back(c.label);
  if (t.node_count() != 15 || root_children != std::vector<int>{1, 4, 6})
    return fail("the 14-letter example does not produce the expected 15-node tree", res.checks);
  if (tree_to_perm(t) != example)
    return fail("the 14-letter example does not invert exactly", res.checks);
  return res;
}

VerifyResult verify_vanishing(int n_max, int k_hi, int order) {
  VerifyResult res;
  for (int k = 3; k <= k_hi; ++k) {
    const PowerSeries s = egf_table(1, k, order);
    ++res.checks;
    if (!is_zero_to_order(s, order))
      return fail("row 1 series at k=" + std::to_string(k) + " is not identically zero",
                  res.checks);
    for (int n = 0; n <= n_max; ++n) {
      ++res.checks;
      for (CountMethod m : {CountMethod::brute, CountMethod::recurrence, CountMethod::series}) {
        if (table_count(1, k, n, m) != 0)
          return fail("row 1 count at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                          " is nonzero by " + to_string(m),
                      res.checks);
      }
    }
  }
  return res;
}

VerifyResult verify_field_purity(int k_max, int order) {
  VerifyResult res;
  for (int row = 1; row <= 6; ++row) {
    for (int k = 1; k <= k_max; ++k) {
      ++res.checks;
      try {
        // egf_table itself rejects irrational or non-counting output.
        const PowerSeries s = egf_table(row, k, order);
        for (int n = 0; n <= order; ++n) egf_count(s, n);
      } catch (const std::exception& e) {
        return fail(e.what(), res.checks);
      }
    }
  }
  return res;
}

VerifyResult verify_erf(int k_max, int order) {
  VerifyResult res;
  for (int k = 2; k <= k_max; ++k) {
    ++res.checks;
    if (!erf_equivalence(k, order))
      return fail("error-function form disagrees with the integral form at k=" +
                      std::to_string(k),
                  res.checks);
  }
  return res;
}

VerifyResult verify_ode_residuals(int order) {
  VerifyResult res;
  const int W = order + 6;
  const auto check = [&](const std::string& name, const PowerSeries& lhs,
                         const PowerSeries& rhs) -> VerifyResult {
    ++res.checks;
    const PowerSeries diff = lhs - rhs;
    if (!is_zero_to_order(diff, std::min(diff.order(), order - 1)))
      return fail("nonzero residual in " + name, res.checks);
    return VerifyResult{true, 0, ""};
  };
  const PowerSeries one = PowerSeries::constant(Root3(1), W);
  const PowerSeries x = PowerSeries::monomial(Root3(1), 1, W);
  const auto xpow = [&](int p) {
    return PowerSeries::monomial(Root3(Rational(BigCount(1), factorial(p))), p, W);
  };

  const PowerSeries E1 = egf_table(3, 1, W);
  const PowerSeries E12 = egf_table(3, 2, W);
  const PowerSeries growth = E12 + x + one;  // the common logarithmic-derivative factor

  // Increasing-run family of the gauss class, k = 1 and k >= 3 forms.
  if (auto r = check("eq2 k=1", derive(E1), growth * E1); !r.ok) return r;
  for (int k = 3; k <= 4; ++k) {
    const PowerSeries Ek = egf_table(3, k, W);
    const PowerSeries Ekm1 = egf_table(3, k - 1, W);
    if (auto r = check("eq2 k=" + std::to_string(k), derive(Ek), growth * Ek + Ekm1); !r.ok)
      return r;
  }
  // Decreasing-run family of the gauss class.
  for (int k = 2; k <= 4; ++k) {
    const PowerSeries Rk = egf_table(4, k, W);
    if (auto r = check("eq4 k=" + std::to_string(k), derive(Rk), growth * (Rk + xpow(k - 1)));
        !r.ok)
      return r;
  }
  // Decreasing-run family of the trig class.
  const PowerSeries E21_123 = egf_table(2, 2, W);
  const PowerSeries trig_growth = E21_123 + x + one;
  for (int k = 2; k <= 4; ++k) {
    const PowerSeries Pk = egf_table(2, k, W);
    if (auto r = check("eq5.1 k=" + std::to_string(k), derive(Pk),
                       trig_growth * (Pk + xpow(k - 1)));
        !r.ok)
      return r;
  }
  // Avoid-213 begin-increasing pair.
  const PowerSeries A = E1;
  const PowerSeries D = E12;  // transported by reverse-complement
  for (int k = 2; k <= 4; ++k) {
    const PowerSeries B = egf_table(5, k, W);
    const PowerSeries C = egf_avoid213_begin_inc_end12(k, W);
    if (auto r = check("eq6 k=" + std::to_string(k), derive(B), (C + xpow(k - 1)) * A); !r.ok)
      return r;
    if (auto r = check("eq7 k=" + std::to_string(k), derive(C),
                       (D + one) * (C + xpow(k - 1)));
        !r.ok)
      return r;
  }
  // Avoid-213 begin-decreasing pair.
  for (int k = 2; k <= 4; ++k) {
    const PowerSeries Bk = egf_table(6, k, W);
    const PowerSeries Ck = egf_avoid213_begin_dec_end12(k, W);
    const PowerSeries Ckm1 = egf_avoid213_begin_dec_end12(k - 1, W);
    if (k == 2) {
      const PowerSeries B1 = A;
      if (auto r = check("eq11", derive(Bk), Ck * A + B1 - one); !r.ok) return r;
    } else {
      const PowerSeries Bkm1 = egf_table(6, k - 1, W);
      if (auto r = check("eq10 k=" + std::to_string(k), derive(Bk), Ck * A + Bkm1); !r.ok)
        return r;
    }
    if (auto r = check("eq20 k=" + std::to_string(k), derive(Ck), (D + one) * Ck + Ckm1); !r.ok)
      return r;
  }
  return res;
}

}  // namespace gpavoid
