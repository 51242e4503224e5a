// Command-line surface for the counting engine: exact counts and
// enumerations of boundary-constrained pattern avoiders, occurrence
// queries, the partition/tree bijections, EGF coefficients, and the
// cross-validation suites.
//
// Exit codes: 0 success / verified, 1 verification failure or input
// outside a bijection's domain (first counterexample reported), 2 usage
// or domain error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpavoid/counting.hpp"
#include "gpavoid/partitions.hpp"
#include "gpavoid/series.hpp"
#include "gpavoid/trees.hpp"
#include "gpavoid/verify.hpp"

using nlohmann::ordered_json;
using namespace gpavoid;

namespace {

int brute_cap_from_env() {
  if (const char* raw = std::getenv("GPAVOID_BRUTE_CAP")) {
    try {
      return std::stoi(raw);
    } catch (const std::exception&) {
      throw std::invalid_argument("GPAVOID_BRUTE_CAP is not an integer: " + std::string(raw));
    }
  }
  return kDefaultBruteCap;
}

struct ConstraintFlags {
  std::optional<int> begin_inc, begin_dec, end_inc, end_dec;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--begin-inc", begin_inc, "first K letters increase (K=1: no restriction)");
    cmd->add_option("--begin-dec", begin_dec, "first K letters decrease (K=1: no restriction)");
    cmd->add_option("--end-inc", end_inc, "last K letters increase (K=1: no restriction)");
    cmd->add_option("--end-dec", end_dec, "last K letters decrease (K=1: no restriction)");
  }

  BoundaryConstraint resolve() const {
    int given = 0;
    BoundaryConstraint c;
    if (begin_inc) { ++given; c = {Placement::begin, Direction::increasing, *begin_inc}; }
    if (begin_dec) { ++given; c = {Placement::begin, Direction::decreasing, *begin_dec}; }
    if (end_inc) { ++given; c = {Placement::end, Direction::increasing, *end_inc}; }
    if (end_dec) { ++given; c = {Placement::end, Direction::decreasing, *end_dec}; }
    if (given != 1)
      throw std::invalid_argument("exactly one of --begin-inc/--begin-dec/--end-inc/--end-dec "
                                  "is required");
    if (c.k < 1) throw std::invalid_argument("the constraint length K must be >= 1");
    return c;
  }
};

ordered_json constraint_json(const BoundaryConstraint& c) {
  ordered_json j;
  j["placement"] = to_string(c.placement);
  j["direction"] = to_string(c.direction);
  j["k"] = c.k;
  return j;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// The dashed pattern of the partition correspondence gets its own fast
// path; everything else classifiable goes through the table.
BigCount dispatch_count(const GeneralizedPattern& g, const BoundaryConstraint& c, int n,
                        const std::string& method_flag, std::string& method_used, int cap) {
  const bool is_132_dashed = g.str() == "1-32";
  const bool formula_applies =
      is_132_dashed && c.placement == Placement::end && c.direction == Direction::increasing;
  if (method_flag == "brute") {
    method_used = "brute";
    return brute_count(CountQuery{g, c, n}, cap);
  }
  if (method_flag == "recurrence" || method_flag == "series" || method_flag == "auto") {
    if (formula_applies && method_flag != "series") {
      method_used = "recurrence";
      if (c.k == 1) return n == 0 ? BigCount(1) : bell(n);
      return n >= 1 && c.k <= n ? p_count_formula(n, c.k) : BigCount(0);
    }
    if (g.length() == 3 && g.contiguous()) {
      const RowClass rc = classify(g, c);
      if (method_flag == "series") {
        method_used = "series";
        return table_count(rc.row, c.k, n, CountMethod::series);
      }
      method_used = "recurrence";
      return table_count(rc.row, c.k, n, CountMethod::recurrence);
    }
    if (method_flag == "auto") {
      method_used = "brute";
      return brute_count(CountQuery{g, c, n}, cap);
    }
    throw std::invalid_argument("method '" + method_flag + "' supports contiguous 3-patterns" +
                                std::string(method_flag != "series" ? " and avoid 1-32 with --end-inc" : "") +
                                "; use --method brute for pattern '" + g.str() + "'");
  }
  throw std::invalid_argument("unknown method '" + method_flag + "'");
}

std::string read_stdin() {
  std::string all, line;
  while (std::getline(std::cin, line)) {
    if (!all.empty()) all += '\n';
    all += line;
  }
  return all;
}

int run(int argc, char** argv) {
  CLI::App app{"exact counting and verification for boundary-constrained 3-pattern avoidance"};
  app.require_subcommand(1);

  // count ----------------------------------------------------------------
  auto* count_cmd = app.add_subcommand("count", "count constrained avoiders of a pattern");
  std::string count_pattern, count_method = "auto", count_format = "json";
  int count_n = 0;
  ConstraintFlags count_flags;
  count_cmd->add_option("--avoid", count_pattern, "pattern, e.g. 132 or 1-32")->required();
  count_flags.add_to(count_cmd);
  count_cmd->add_option("--n", count_n, "permutation length")->required();
  count_cmd->add_option("--method", count_method, "brute|recurrence|series|auto");
  count_cmd->add_option("--format", count_format, "json|csv");

  // enumerate -------------------------------------------------------------
  auto* enum_cmd = app.add_subcommand("enumerate", "list the witnesses themselves");
  std::string enum_pattern, enum_format = "text";
  int enum_n = 0;
  ConstraintFlags enum_flags;
  enum_cmd->add_option("--avoid", enum_pattern, "pattern, e.g. 132 or 1-32")->required();
  enum_flags.add_to(enum_cmd);
  enum_cmd->add_option("--n", enum_n, "permutation length")->required();
  enum_cmd->add_option("--format", enum_format, "text|json");

  // occurrences -----------------------------------------------------------
  auto* occ_cmd = app.add_subcommand("occurrences", "occurrences of a pattern in a permutation");
  std::string occ_perm, occ_pattern;
  occ_cmd->add_option("--perm", occ_perm, "host permutation")->required();
  occ_cmd->add_option("--pattern", occ_pattern, "pattern")->required();

  // bijection ---------------------------------------------------------------
  auto* bij_cmd = app.add_subcommand("bijection", "apply a constructive bijection");
  std::string bij_map, bij_input;
  int bij_k = 2;
  bool bij_check = false;
  bool bij_has_input = false;
  bij_cmd->add_option("--map", bij_map,
                      "partition-to-perm|perm-to-partition|perm-to-tree|tree-to-perm")
      ->required();
  auto* input_opt = bij_cmd->add_option("--input", bij_input, "object (JSON or permutation text); stdin when omitted");
  bij_cmd->add_option("--k", bij_k, "boundary run length for the partition maps");
  bij_cmd->add_flag("--check", bij_check, "re-apply the inverse and assert identity");

  // series -----------------------------------------------------------------
  auto* series_cmd = app.add_subcommand("series", "EGF counts a_n of a table row");
  int series_row = 0, series_k = 1, series_order = 20;
  std::string series_format = "text";
  series_cmd->add_option("--row", series_row, "table row 1..6")->required();
  series_cmd->add_option("--k", series_k, "boundary run length");
  series_cmd->add_option("--order", series_order, "truncation order");
  series_cmd->add_option("--format", series_format, "text|json|csv");

  // identity ----------------------------------------------------------------
  auto* id_cmd = app.add_subcommand("identity", "check the Bell/Stirling marked-partition identity");
  int id_n_max = 20;
  id_cmd->add_option("--n-max", id_n_max, "largest n to check");

  // verify -------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run a cross-validation suite");
  std::string verify_scope;
  std::optional<int> verify_n_max, verify_k_max;
  verify_cmd->add_option("scope", verify_scope, "table|bijections|identity|erf|all")->required();
  verify_cmd->add_option("--n-max", verify_n_max, "largest length to check");
  verify_cmd->add_option("--k-max", verify_k_max, "largest boundary run length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const int cap = brute_cap_from_env();

  if (count_cmd->parsed()) {
    const GeneralizedPattern g = GeneralizedPattern::parse(count_pattern);
    const BoundaryConstraint c = count_flags.resolve();
    std::string method_used;
    const BigCount value = dispatch_count(g, c, count_n, count_method, method_used, cap);
    if (count_format == "csv") {
      std::cout << "n,count\n" << count_n << "," << value.str() << "\n";
    } else if (count_format == "json") {
      ordered_json j;
      j["pattern"] = g.str();
      j["constraint"] = constraint_json(c);
      j["n"] = count_n;
      j["method"] = method_used;
      j["count"] = value.str();
      emit(j);
    } else {
      throw std::invalid_argument("unknown format '" + count_format + "'");
    }
    return 0;
  }

  if (enum_cmd->parsed()) {
    const GeneralizedPattern g = GeneralizedPattern::parse(enum_pattern);
    const BoundaryConstraint c = enum_flags.resolve();
    const CountQuery q{g, c, enum_n};
    if (enum_format == "json") {
      ordered_json j;
      j["pattern"] = g.str();
      j["constraint"] = constraint_json(c);
      j["n"] = enum_n;
      ordered_json witnesses = ordered_json::array();
      BigCount total = 0;
      for_each_witness(q, [&](const Permutation& p) {
        witnesses.push_back(p.str());
        ++total;
      }, cap);
      j["count"] = total.str();
      j["witnesses"] = std::move(witnesses);
      emit(j);
    } else if (enum_format == "text") {
      for_each_witness(q, [&](const Permutation& p) { std::cout << p.str() << "\n"; }, cap);
    } else {
      throw std::invalid_argument("unknown format '" + enum_format + "'");
    }
    return 0;
  }

  if (occ_cmd->parsed()) {
    const Permutation p = Permutation::parse(occ_perm);
    const GeneralizedPattern g = GeneralizedPattern::parse(occ_pattern);
    const auto tuples = occurrences(p, g);
    ordered_json j;
    j["perm"] = p.str();
    j["pattern"] = g.str();
    j["count"] = tuples.size();
    j["occurrences"] = tuples;  // 1-based position tuples
    emit(j);
    return 0;
  }

  if (bij_cmd->parsed()) {
    bij_has_input = input_opt->count() > 0;
    const std::string input = bij_has_input ? bij_input : read_stdin();
    try {
      if (bij_map == "partition-to-perm") {
        const MarkedPartition pp = MarkedPartition::from_json(nlohmann::json::parse(input));
        const Permutation image = partition_to_perm(pp, bij_k);
        if (bij_check && !(perm_to_partition(image, bij_k) == pp))
          throw std::runtime_error("round-trip check failed");
        std::cout << image.str() << "\n";
      } else if (bij_map == "perm-to-partition") {
        const Permutation p = Permutation::parse(input);
        const MarkedPartition pp = perm_to_partition(p, bij_k);
        if (bij_check && !(partition_to_perm(pp, bij_k) == p))
          throw std::runtime_error("round-trip check failed");
        std::cout << pp.to_json().dump() << "\n";
      } else if (bij_map == "perm-to-tree") {
        const Permutation p = Permutation::parse(input);
        const IncreasingTrimmedTree t = perm_to_tree(p);
        if (bij_check && !(tree_to_perm(t) == p))
          throw std::runtime_error("round-trip check failed");
        std::cout << t.to_json().dump() << "\n";
      } else if (bij_map == "tree-to-perm") {
        const IncreasingTrimmedTree t =
            IncreasingTrimmedTree::from_json(nlohmann::json::parse(input));
        const Permutation p = tree_to_perm(t);
        if (bij_check && !(perm_to_tree(p) == t))
          throw std::runtime_error("round-trip check failed");
        std::cout << p.str() << "\n";
      } else {
        throw std::invalid_argument("unknown map '" + bij_map + "'");
      }
    } catch (const std::domain_error& e) {
      // Valid object, but outside the map's domain.
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

  if (series_cmd->parsed()) {
    const PowerSeries s = egf_table(series_row, series_k, std::max(series_order, series_k));
    if (series_format == "json") {
      ordered_json arr = ordered_json::array();
      for (int n = 0; n <= series_order; ++n) {
        ordered_json item;
        item["n"] = n;
        const Rational a = egf_coefficient(s, n);
        item["a"] = boost::multiprecision::denominator(a) == 1
                        ? boost::multiprecision::numerator(a).str()
                        : a.str();
        arr.push_back(std::move(item));
      }
      emit(arr);
    } else if (series_format == "csv") {
      std::cout << "n,count\n";
      for (int n = 0; n <= series_order; ++n)
        std::cout << n << "," << egf_coefficient(s, n).str() << "\n";
    } else if (series_format == "text") {
      for (int n = 0; n <= series_order; ++n) {
        const Rational a = egf_coefficient(s, n);
        std::cout << boost::multiprecision::numerator(a).str() << "/"
                  << boost::multiprecision::denominator(a).str() << "\n";
      }
    } else {
      throw std::invalid_argument("unknown format '" + series_format + "'");
    }
    return 0;
  }

  if (id_cmd->parsed()) {
    const VerifyResult r = verify_identity(id_n_max, std::min(id_n_max, 8));
    ordered_json j;
    j["scope"] = "identity";
    j["n_max"] = id_n_max;
    j["checks"] = r.checks;
    j["ok"] = r.ok;
    if (!r.ok) j["counterexample"] = r.counterexample;
    emit(j);
    return r.ok ? 0 : 1;
  }

  if (verify_cmd->parsed()) {
    VerifyResult r;
    int n_max = 0, k_max = 0;
    if (verify_scope == "table") {
      n_max = verify_n_max.value_or(9);
      k_max = verify_k_max.value_or(4);
      r = verify_table(n_max, k_max, std::max(cap, n_max));
    } else if (verify_scope == "bijections") {
      n_max = verify_n_max.value_or(8);
      k_max = verify_k_max.value_or(4);
      r = combine(verify_partition_bijection(n_max, k_max, std::max(cap, n_max)),
                  verify_tree_bijection(std::min(n_max + 1, 9), std::max(cap, n_max + 1)));
    } else if (verify_scope == "identity") {
      n_max = verify_n_max.value_or(20);
      k_max = 0;
      r = verify_identity(n_max, std::min(n_max, 8));
    } else if (verify_scope == "erf") {
      n_max = verify_n_max.value_or(20);
      k_max = verify_k_max.value_or(5);
      r = verify_erf(k_max, n_max);
    } else if (verify_scope == "all") {
      n_max = verify_n_max.value_or(8);
      k_max = verify_k_max.value_or(3);
      const int all_cap = std::max(cap, n_max + 1);
      r = verify_table(n_max, k_max, all_cap);
      r = combine(r, verify_symmetry_classes(n_max, std::min(k_max, 3), all_cap));
      r = combine(r, verify_prop1(n_max, 5, all_cap));
      r = combine(r, verify_identity(20, std::min(n_max, 8)));
      r = combine(r, verify_partition_bijection(n_max, 4, all_cap));
      r = combine(r, verify_tree_bijection(std::min(n_max + 1, 9), all_cap));
      r = combine(r, verify_vanishing(n_max, 4, 20));
      r = combine(r, verify_field_purity(5, 20));
      r = combine(r, verify_erf(5, 20));
      r = combine(r, verify_ode_residuals(20));
    } else {
      throw std::invalid_argument("unknown scope '" + verify_scope +
                                  "' (expected table|bijections|identity|erf|all)");
    }
    ordered_json j;
    j["scope"] = verify_scope;
    j["n_max"] = n_max;
    if (k_max > 0) j["k_max"] = k_max;
    j["checks"] = r.checks;
    j["ok"] = r.ok;
    if (!r.ok) j["counterexample"] = r.counterexample;
    emit(j);
    return r.ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
