"""Simple and simplicial vertices, and greedy elimination.

A graph is strongly chordal exactly when every induced subgraph has a simple
vertex, and chordal exactly when every induced subgraph has a simplicial
vertex.  Both properties are hereditary, so deleting any qualifying vertex and
repeating never needs to backtrack; the lowest-id vertex is always taken.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph


@dataclass(frozen=True)
class EliminationOutcome:
    """Result of a greedy elimination run.

    ``ordering`` lists deleted vertices in deletion order using the labels of
    the input graph.  When the run gets stuck, ``stuck_subgraph`` is the
    induced remainder; its ``labels`` map back to the input graph's labels.
    """

    success: bool
    ordering: tuple[int, ...]
    stuck_subgraph: Graph | None = None


def is_simplicial(g: Graph, v: int) -> bool:
    nbrs = sorted(g.neighbors(v))
    return all(g.has_edge(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1:])


def is_simple(g: Graph, v: int) -> bool:
    """True if the closed neighbourhoods of ``v``'s neighbours form a chain."""
    chain = sorted((g.closed_neighborhood(u) for u in g.neighbors(v)), key=len)
    return all(a <= b for a, b in zip(chain, chain[1:]))


def find_simple_vertex(g: Graph) -> int | None:
    for v in g.vertices():
        if is_simple(g, v):
            return v
    return None


def _run(g: Graph, mode: int, backend: str | None) -> EliminationOutcome:
    if g.vertex_count == 0:
        return EliminationOutcome(True, ())
    out = eliminate_matrix(g.to_matrix(), mode, backend)
    if out.success:
        return EliminationOutcome(True, tuple(g.labels[v] for v in out.ordering))
    stuck = out.stuck_subgraph
    return EliminationOutcome(
        False,
        tuple(g.labels[v] for v in out.ordering),
        Graph(stuck.adjacency, tuple(g.labels[v] for v in stuck.labels)),
    )


def eliminate_matrix(
    adj: np.ndarray, mode: int = _kernels.SIMPLE, backend: str | None = None
) -> EliminationOutcome:
    """Elimination on a 0/1 adjacency matrix; ids are matrix row indices.

    Skips building a :class:`Graph` unless the run gets stuck.
    """
    n = adj.shape[0]
    order, count = _kernels.eliminate(adj, mode, backend)
    ordering = tuple(order[:count].tolist())
    if count == n:
        return EliminationOutcome(True, ordering)
    keep = np.setdiff1d(np.arange(n), order[:count])
    stuck = Graph.from_matrix(adj[np.ix_(keep, keep)])
    return EliminationOutcome(False, ordering, Graph(stuck.adjacency, tuple(keep.tolist())))


def simple_elimination(g: Graph, backend: str | None = None) -> EliminationOutcome:
    """Greedily delete simple vertices until the graph is empty or none is left.

    ``backend`` selects the kernel (``"numba"`` or ``"numpy"``); ``None``
    uses the process default.
    """
    return _run(g, _kernels.SIMPLE, backend)


def simplicial_elimination(g: Graph, backend: str | None = None) -> EliminationOutcome:
    return _run(g, _kernels.SIMPLICIAL, backend)


def reference_elimination(g: Graph, simple: bool = True) -> EliminationOutcome:
    """Set-based elimination built directly on :func:`is_simple`.

    Slow, but shares no code with the matrix kernels; kept as a cross-check.
    """
    test = is_simple if simple else is_simplicial
    ordering = []
    h = g
    while h.vertex_count:
        v = next((u for u in h.vertices() if test(h, u)), None)
        if v is None:
            return EliminationOutcome(False, tuple(ordering), h)
        ordering.append(h.labels[v])
        h = h.delete_vertex(v)
    return EliminationOutcome(True, tuple(ordering))


def is_strongly_chordal(g: Graph, backend: str | None = None) -> bool:
    return simple_elimination(g, backend).success


def is_chordal(g: Graph, backend: str | None = None) -> bool:
    return simplicial_elimination(g, backend).success
