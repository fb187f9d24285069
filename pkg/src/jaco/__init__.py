"""Finite Jaco graphs J_n(1): construction, invariants, and oracle cross-checks."""

from .closed_forms import (
    chromatic_closed_form,
    covering_number,
    gamma_recursion,
    independence_trace,
    murtage_bound_check,
)
from .domination import (
    DomAnalysis,
    all_gamma_sets,
    analyze_gamma_set,
    bondage,
    compact_gamma_sets,
    disjoint_union_check,
    gamma,
    gamma_minus,
    murtage_exact,
    murtage_via_theorem,
    spanning_tree_preserving,
)
from .graph import SimpleGraph, cycle_graph, make_graph, path_graph
from .jacograph import JacoGraph, build_jaco, hope_graph, prime_jaconian

__all__ = [
    "DomAnalysis", "JacoGraph", "SimpleGraph",
    "all_gamma_sets", "analyze_gamma_set", "bondage", "build_jaco",
    "chromatic_closed_form", "compact_gamma_sets", "covering_number", "cycle_graph",
    "disjoint_union_check", "gamma", "gamma_minus", "gamma_recursion", "hope_graph",
    "independence_trace", "make_graph", "murtage_bound_check", "murtage_exact",
    "murtage_via_theorem", "path_graph", "prime_jaconian", "spanning_tree_preserving",
]
