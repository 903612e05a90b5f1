"""Exact computer algebra for rooted-tree Hopf algebras, order polynomials,
noncommutative series and tree expansions of formal automorphisms."""

from treehopf.trees import (
    Forest,
    InvalidLabelError,
    Tree,
    aut_order,
    b_minus,
    b_plus,
    canonicalize,
    enumerate_trees,
    parse_forest,
    parse_tree,
)

__all__ = [
    "Forest",
    "InvalidLabelError",
    "Tree",
    "aut_order",
    "b_minus",
    "b_plus",
    "canonicalize",
    "enumerate_trees",
    "parse_forest",
    "parse_tree",
]

__version__ = "0.1.0"
