"""Exact counting and verification for boundary-constrained consecutive and
vincular 3-pattern avoidance: pattern matching, Bell/Stirling machinery, the
marked-partition and increasing-trimmed-tree bijections, exhaustive counters,
coefficient recurrences and exact EGF coefficients."""

from gpavoid._gpavoid import (  # noqa: F401
    avoids,
    bell,
    boundary_satisfies,
    brute_count,
    brute_enumerate,
    classify,
    count_irtt,
    egf_counts,
    erf_equivalence,
    lemma2_sides,
    marked_partitions,
    occurrences,
    p_count_formula,
    parse_pattern,
    parse_perm,
    partition_to_perm,
    perm_to_partition,
    perm_to_tree,
    right_to_left_minima,
    stirling2,
    table_count,
    thm4_is_valid,
    tree_to_perm,
    trivial_map,
    verify_all,
)

__all__ = [
    "avoids",
    "bell",
    "boundary_satisfies",
    "brute_count",
    "brute_enumerate",
    "classify",
    "count_irtt",
    "egf_counts",
    "erf_equivalence",
    "lemma2_sides",
    "marked_partitions",
    "occurrences",
    "p_count_formula",
    "parse_pattern",
    "parse_perm",
    "partition_to_perm",
    "perm_to_partition",
    "perm_to_tree",
    "right_to_left_minima",
    "stirling2",
    "table_count",
    "thm4_is_valid",
    "tree_to_perm",
    "trivial_map",
    "verify_all",
]

__version__ = "1.0.0"
