"""Recognition of chordal, 2-chordal and k-chordal bipartite graphs."""

from .elimination import (
    EliminationOutcome,
    find_simple_vertex,
    is_chordal,
    is_simple,
    is_simplicial,
    is_strongly_chordal,
    simple_elimination,
)
from .graph import BipartiteGraph, Graph, GraphError, from_parts, two_color
from .recognition import (
    CheckReport,
    Witness,
    check,
    is_chordal_bipartite,
    is_k_chordal_bipartite,
    is_two_chordal_bipartite,
)

__all__ = [
    "BipartiteGraph",
    "CheckReport",
    "EliminationOutcome",
    "Graph",
    "GraphError",
    "Witness",
    "check",
    "find_simple_vertex",
    "from_parts",
    "is_chordal",
    "is_chordal_bipartite",
    "is_k_chordal_bipartite",
    "is_simple",
    "is_simplicial",
    "is_strongly_chordal",
    "is_two_chordal_bipartite",
    "simple_elimination",
    "two_color",
]
