"""Graceful labellings and 0-rotatability of rooted symmetric trees."""

from ._core import (
    GeneralTree,
    RootedSymmetricTree,
    Unsupported,
    algebraic_label,
    classify,
    compose,
    count_graceful,
    edge_labels,
    find_graceful,
    free_trees,
    is_graceful,
    is_zero_rotatable,
    level_numbers,
    transposition_label,
    vertex_orbits,
    zero_at,
)

__all__ = [
    "GeneralTree",
    "RootedSymmetricTree",
    "Unsupported",
    "algebraic_label",
    "classify",
    "compose",
    "count_graceful",
    "edge_labels",
    "find_graceful",
    "free_trees",
    "is_graceful",
    "is_zero_rotatable",
    "level_numbers",
    "transposition_label",
    "vertex_orbits",
    "zero_at",
]
