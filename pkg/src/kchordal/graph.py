"""Immutable graph values.

Two value types live here: :class:`Graph`, a plain simple undirected graph on
dense integer ids, and :class:`BipartiteGraph`, a pair of vertex parts with
cross edges stored as ``(x, y)`` index pairs.  Every operation that looks like
a mutation returns a new value.

When a bipartite graph is flattened into a :class:`Graph` the X vertices come
first (ids ``0..x_count-1``) followed by the Y vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Literal, Sequence

import numpy as np

Side = Literal["x", "y"]


class GraphError(ValueError):
    """Raised when a graph is built from, or queried with, invalid data."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``.

    ``labels`` maps each current id to the id it had in the graph this one
    was derived from (by default the identity), so that orderings computed on
    induced subgraphs can be reported in original ids.
    """

    adjacency: tuple[frozenset[int], ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        n = len(self.adjacency)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(n)))
        elif len(self.labels) != n:
            raise GraphError("labels must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"vertex {v} has out-of-range neighbour {u}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"edge ({v}, {u}) is not symmetric")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(frozenset(s) for s in adj))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> Graph:
        a = np.asarray(matrix, dtype=bool)
        return cls(tuple(frozenset(np.flatnonzero(row).tolist()) for row in a))

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.vertex_count)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return sorted((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v] | {v}

    def to_matrix(self) -> np.ndarray:
        n = self.vertex_count
        a = np.zeros((n, n), dtype=np.bool_)
        for v, nbrs in enumerate(self.adjacency):
            if nbrs:
                a[v, list(nbrs)] = True
        return a

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on ``keep``; survivors keep their relative order."""
        kept = sorted(set(keep))
        for v in kept:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(kept)}
        adj = tuple(
            frozenset(index[u] for u in self.adjacency[v] if u in index) for v in kept
        )
        return Graph(adj, tuple(self.labels[v] for v in kept))

    def delete_vertex(self, v: int) -> Graph:
        self._check_vertex(v)
        return self.induced(u for u in self.vertices() if u != v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} not in graph with {self.vertex_count} vertices")


def delete_vertex(g: Graph, v: int) -> Graph:
    return g.delete_vertex(v)


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.closed_neighborhood(v)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with parts ``X = 0..x_count-1`` and ``Y = 0..y_count-1``.

    Edges are ``(x, y)`` index pairs; an X index and a Y index with the same
    value are different vertices.
    """

    x_count: int
    y_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.x_count < 0 or self.y_count < 0:
            raise GraphError("part sizes must be non-negative")
        for i, j in self.edges:
            if not (0 <= i < self.x_count and 0 <= j < self.y_count):
                raise GraphError(
                    f"edge ({i}, {j}) out of range for parts of size "
                    f"{self.x_count} and {self.y_count}"
                )

    @classmethod
    def from_parts(
        cls, x_count: int, y_count: int, edges: Iterable[Sequence[int]]
    ) -> BipartiteGraph:
        pairs = []
        for e in edges:
            i, j = e
            if not (0 <= i < x_count and 0 <= j < y_count):
                raise GraphError(
                    f"edge ({i}, {j}) out of range for parts of size {x_count} and {y_count}"
                )
            pairs.append((int(i), int(j)))
        return cls(x_count, y_count, frozenset(pairs))

    @property
    def vertex_count(self) -> int:
        return self.x_count + self.y_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def delete_edge(self, e: tuple[int, int]) -> BipartiteGraph:
        e = (int(e[0]), int(e[1]))
        if e not in self.edges:
            raise GraphError(f"edge {e} is not in the graph")
        return BipartiteGraph(self.x_count, self.y_count, self.edges - {e})

    def delete_edges(self, es: Iterable[tuple[int, int]]) -> BipartiteGraph:
        es = frozenset(es)
        missing = es - self.edges
        if missing:
            raise GraphError(f"edges {sorted(missing)} are not in the graph")
        return BipartiteGraph(self.x_count, self.y_count, self.edges - es)

    def add_edge(self, e: tuple[int, int]) -> BipartiteGraph:
        return BipartiteGraph.from_parts(self.x_count, self.y_count, [*self.edges, e])

    def underlying(self) -> Graph:
        """The forgetful graph: X vertices first, then Y vertices."""
        off = self.x_count
        return Graph.from_edges(self.vertex_count, ((i, off + j) for i, j in self.edges))

    def glue_clique(self, side: Side = "x") -> Graph:
        """Underlying graph with every pair of vertices on ``side`` joined."""
        if side == "x":
            part = range(self.x_count)
        elif side == "y":
            part = range(self.x_count, self.vertex_count)
        else:
            raise GraphError(f"side must be 'x' or 'y', got {side!r}")
        off = self.x_count
        cross = [(i, off + j) for i, j in self.edges]
        return Graph.from_edges(self.vertex_count, cross + list(combinations(part, 2)))

    def vertex_name(self, v: int) -> str:
        """1-based human label of a flattened vertex id, e.g. ``x1`` or ``y3``."""
        if v < self.x_count:
            return f"x{v + 1}"
        return f"y{v - self.x_count + 1}"


def from_parts(x_count: int, y_count: int, edges: Iterable[Sequence[int]]) -> BipartiteGraph:
    return BipartiteGraph.from_parts(x_count, y_count, edges)


def delete_edge(b: BipartiteGraph, e: tuple[int, int]) -> BipartiteGraph:
    return b.delete_edge(e)


def glue_clique(b: BipartiteGraph, side: Side = "x") -> Graph:
    return b.glue_clique(side)


@dataclass(frozen=True)
class TwoColoring:
    """Result of :func:`two_color`: exactly one of the two fields is set."""

    bipartite: BipartiteGraph | None
    odd_cycle: tuple[int, ...] | None = None
    x_vertices: tuple[int, ...] = ()
    y_vertices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.bipartite is not None


def two_color(g: Graph) -> TwoColoring:
    """BFS 2-coloring; component roots (lowest id per component) go to X.

    Within each part vertices keep their relative id order.  On failure the
    result carries an odd cycle of ``g`` as a vertex sequence.
    """
    n = g.vertex_count
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adjacency[u]):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return TwoColoring(None, _odd_cycle(u, w, parent, depth))
    xs = tuple(v for v in range(n) if color[v] == 0)
    ys = tuple(v for v in range(n) if color[v] == 1)
    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: i for i, v in enumerate(ys)}
    edges = [(xi[u], yi[v]) if u in xi else (xi[v], yi[u]) for u, v in g.edges()]
    return TwoColoring(BipartiteGraph.from_parts(len(xs), len(ys), edges), None, xs, ys)


def _odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # walk both BFS-tree paths up to their lowest common ancestor
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    cyc = left + right[::-1]
    # rotate to the smallest vertex, heading towards its smaller neighbour
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if cyc[-1] < cyc[1]:
        cyc = cyc[:1] + cyc[:0:-1]
    return tuple(cyc)


# Named families used by tests, the generator and the benchmark.

def cycle(n: int) -> BipartiteGraph:
    """Even cycle ``x0 y0 x1 y1 ...`` on ``n`` vertices."""
    if n < 4 or n % 2:
        raise GraphError(f"bipartite cycle length must be even and >= 4, got {n}")
    m = n // 2
    return BipartiteGraph.from_parts(m, m, [(i, i) for i in range(m)] + [((i + 1) % m, i) for i in range(m)])


def complete_bipartite(p: int, q: int) -> BipartiteGraph:
    return BipartiteGraph.from_parts(p, q, [(i, j) for i in range(p) for j in range(q)])


def star(n: int) -> BipartiteGraph:
    return complete_bipartite(1, n)


def domino() -> BipartiteGraph:
    """Two 4-cycles sharing the edge ``(1, 1)``: a 6-cycle plus one chord."""
    return BipartiteGraph.from_parts(
        3, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)]
    )
