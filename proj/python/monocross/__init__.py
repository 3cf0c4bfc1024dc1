"""2-colored crossing numbers of straight-line drawings of complete graphs."""

from ._monocross import (
    Drawing,
    GeneralPositionError,
    ParseError,
    anneal,
    convex_drawing,
    crossing_constant,
    crossing_count,
    crossing_lemma_constant,
    crossing_pairs,
    double_chain,
    duplicate_cr2,
    exact_cr2,
    export_covering_lp,
    find_halving_matching,
    intersection_adjacency,
    lemma1_constant,
    local_search,
    lower_bound,
    mono_crossings,
    pipeline,
    random_coloring,
    random_drawing,
    ratio,
    read_points,
    two_page_optimum,
    write_points,
)

__all__ = [
    "Drawing",
    "GeneralPositionError",
    "ParseError",
    "anneal",
    "convex_drawing",
    "crossing_constant",
    "crossing_count",
    "crossing_lemma_constant",
    "crossing_pairs",
    "double_chain",
    "duplicate_cr2",
    "exact_cr2",
    "export_covering_lp",
    "find_halving_matching",
    "intersection_adjacency",
    "lemma1_constant",
    "local_search",
    "lower_bound",
    "mono_crossings",
    "pipeline",
    "random_coloring",
    "random_drawing",
    "ratio",
    "read_points",
    "two_page_optimum",
    "write_points",
]
