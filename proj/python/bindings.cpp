// Python bindings for the counting engine. Counts are arbitrary
// precision, so they cross the boundary as decimal strings and surface as
// Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "gpavoid/counting.hpp"
#include "gpavoid/partitions.hpp"
#include "gpavoid/series.hpp"
#include "gpavoid/trees.hpp"
#include "gpavoid/verify.hpp"

namespace py = pybind11;
using namespace gpavoid;

namespace {

py::object to_pyint(const BigCount& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

Permutation perm_from_list(const std::vector<int>& letters) { return Permutation(letters); }

BoundaryConstraint make_constraint(const std::string& placement, const std::string& direction,
                                   int k) {
  return BoundaryConstraint{placement_from_string(placement), direction_from_string(direction), k};
}

Symmetry symmetry_from_string(const std::string& s) {
  if (s == "identity") return Symmetry::identity;
  if (s == "reverse") return Symmetry::reverse;
  if (s == "complement") return Symmetry::complement;
  if (s == "reverse-complement" || s == "reverse_complement") return Symmetry::reverse_complement;
  throw std::invalid_argument("unknown symmetry '" + s + "'");
}

py::dict tree_to_dict(const TreeNode& node) {
  py::dict d;
  d["label"] = node.label;
  py::list children;
  for (const auto& c : node.children) children.append(tree_to_dict(c));
  d["children"] = std::move(children);
  return d;
}

TreeNode tree_from_dict(const py::dict& d) {
  TreeNode node;
  node.label = d["label"].cast<int>();
  if (d.contains("children"))
    for (const auto& c : d["children"]) node.children.push_back(tree_from_dict(py::cast<py::dict>(c)));
  return node;
}

}  // namespace

PYBIND11_MODULE(_gpavoid, m) {
  m.doc() = "exact counting and verification for boundary-constrained 3-pattern avoidance";

  // permutations -------------------------------------------------------
  m.def("parse_perm",
        [](const std::string& text) { return Permutation::parse(text).letters(); },
        py::arg("text"), "parse '5 4 1 2 3', '5,4,1,2,3' or a digit string (n <= 9)");
  m.def("trivial_map",
        [](const std::vector<int>& p, const std::string& symmetry) {
          return trivial_map(perm_from_list(p), symmetry_from_string(symmetry)).letters();
        },
        py::arg("perm"), py::arg("symmetry"),
        "apply reverse, complement or reverse-complement");
  m.def("boundary_satisfies",
        [](const std::vector<int>& p, const std::string& placement, const std::string& direction,
           int k) { return boundary_satisfies(perm_from_list(p), make_constraint(placement, direction, k)); },
        py::arg("perm"), py::arg("placement"), py::arg("direction"), py::arg("k"));
  m.def("right_to_left_minima",
        [](const std::vector<int>& p) { return right_to_left_minima(perm_from_list(p)); },
        py::arg("perm"));

  // patterns -----------------------------------------------------------
  m.def("parse_pattern",
        [](const std::string& text) {
          const GeneralizedPattern g = GeneralizedPattern::parse(text);
          return py::make_tuple(g.letters(), std::vector<bool>(g.adjacency()));
        },
        py::arg("text"), "returns (letters, adjacency flags)");
  m.def("occurrences",
        [](const std::vector<int>& p, const std::string& pattern) {
          return occurrences(perm_from_list(p), GeneralizedPattern::parse(pattern));
        },
        py::arg("perm"), py::arg("pattern"), "1-based position tuples in lexicographic order");
  m.def("avoids",
        [](const std::vector<int>& p, const std::string& pattern) {
          return avoids(perm_from_list(p), GeneralizedPattern::parse(pattern));
        },
        py::arg("perm"), py::arg("pattern"));

  // partitions and counts ------------------------------------------------
  m.def("bell", [](int n) { return to_pyint(bell(n)); }, py::arg("n"));
  m.def("stirling2", [](int n, int k) { return to_pyint(stirling2(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("p_count_formula", [](int n, int k) { return to_pyint(p_count_formula(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("lemma2_sides",
        [](int n) {
          const auto [lhs, rhs] = lemma2_sides(n);
          return py::make_tuple(to_pyint(lhs), to_pyint(rhs));
        },
        py::arg("n"));
  m.def("marked_partitions",
        [](int m) {
          py::list out;
          for_each_marked_partition(m, [&](const MarkedPartition& pp) {
            out.append(py::make_tuple(pp.blocks(), pp.marked()));
          });
          return out;
        },
        py::arg("m"), "list of (blocks, marked index) in canonical block order");
  m.def("thm4_is_valid",
        [](const std::vector<std::vector<int>>& blocks, int marked, int k) {
          return thm4_is_valid(MarkedPartition(blocks, marked), k);
        },
        py::arg("blocks"), py::arg("marked"), py::arg("k"));
  m.def("partition_to_perm",
        [](const std::vector<std::vector<int>>& blocks, int marked, int k) {
          return partition_to_perm(MarkedPartition(blocks, marked), k).letters();
        },
        py::arg("blocks"), py::arg("marked"), py::arg("k") = 2);
  m.def("perm_to_partition",
        [](const std::vector<int>& p, int k) {
          const MarkedPartition pp = perm_to_partition(perm_from_list(p), k);
          return py::make_tuple(pp.blocks(), pp.marked());
        },
        py::arg("perm"), py::arg("k") = 2);

  // trees ----------------------------------------------------------------
  m.def("perm_to_tree",
        [](const std::vector<int>& p) { return tree_to_dict(perm_to_tree(perm_from_list(p)).root()); },
        py::arg("perm"), "nested {'label': ..., 'children': [...]} dicts");
  m.def("tree_to_perm",
        [](const py::dict& tree) {
          return tree_to_perm(IncreasingTrimmedTree(tree_from_dict(tree))).letters();
        },
        py::arg("tree"));
  m.def("count_irtt", [](int node_count) { return to_pyint(count_irtt(node_count)); },
        py::arg("node_count"));

  // counting ---------------------------------------------------------------
  m.def("brute_count",
        [](const std::string& pattern, const std::string& placement, const std::string& direction,
           int k, int n, int cap) {
          const CountQuery q{GeneralizedPattern::parse(pattern),
                             make_constraint(placement, direction, k), n};
          return to_pyint(brute_count(q, cap));
        },
        py::arg("pattern"), py::arg("placement"), py::arg("direction"), py::arg("k"),
        py::arg("n"), py::arg("cap") = kDefaultBruteCap);
  m.def("brute_enumerate",
        [](const std::string& pattern, const std::string& placement, const std::string& direction,
           int k, int n, int cap) {
          const CountQuery q{GeneralizedPattern::parse(pattern),
                             make_constraint(placement, direction, k), n};
          std::vector<std::vector<int>> out;
          for_each_witness(q, [&](const Permutation& p) { out.push_back(p.letters()); }, cap);
          return out;
        },
        py::arg("pattern"), py::arg("placement"), py::arg("direction"), py::arg("k"),
        py::arg("n"), py::arg("cap") = kDefaultBruteCap);
  m.def("classify",
        [](const std::string& pattern, const std::string& placement,
           const std::string& direction) {
          const RowClass rc = classify(GeneralizedPattern::parse(pattern),
                                       make_constraint(placement, direction, 1));
          return py::make_tuple(rc.row, to_string(rc.to_representative));
        },
        py::arg("pattern"), py::arg("placement"), py::arg("direction"),
        "returns (row 1..6, symmetry onto the representative)");
  m.def("table_count",
        [](int row, int k, int n, const std::string& method, int cap) {
          return to_pyint(table_count(row, k, n, count_method_from_string(method), cap));
        },
        py::arg("row"), py::arg("k"), py::arg("n"), py::arg("method") = "recurrence",
        py::arg("cap") = kDefaultBruteCap);

  // series -------------------------------------------------------------------
  m.def("egf_counts",
        [](int row, int k, int order) {
          const PowerSeries s = egf_table(row, k, std::max(order, k));
          py::list out;
          for (int n = 0; n <= order; ++n) out.append(to_pyint(egf_count(s, n)));
          return out;
        },
        py::arg("row"), py::arg("k"), py::arg("order") = 20,
        "EGF counts a_0..a_order of a table row");
  m.def("erf_equivalence", [](int k, int order) { return erf_equivalence(k, order); },
        py::arg("k"), py::arg("order") = 20);

  // verification ----------------------------------------------------------
  m.def("verify_all",
        [](int n_max, int k_max) {
          VerifyResult r = verify_table(n_max, k_max);
          r = combine(r, verify_symmetry_classes(std::min(n_max, 8), std::min(k_max, 3)));
          r = combine(r, verify_identity(20, 8));
          r = combine(r, verify_partition_bijection(std::min(n_max, 8), 4));
          r = combine(r, verify_tree_bijection(std::min(n_max + 1, 9)));
          r = combine(r, verify_erf(5, 20));
          r = combine(r, verify_ode_residuals(20));
          return py::make_tuple(r.ok, r.checks, r.counterexample);
        },
        py::arg("n_max") = 7, py::arg("k_max") = 3,
        "returns (ok, number of checks, first counterexample)");
}
