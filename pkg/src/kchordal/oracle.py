"""Brute-force ground truth for every graph class used by the package.

Everything here is exponential and works straight from the definitions:
enumerate the cycles, count the chords, or search all vertex orderings.  None
of it touches the elimination kernels, so it can be used to check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .graph import BipartiteGraph, Graph, GraphError, domino

MAX_CYCLE_VERTICES = 16
MAX_ORDERING_VERTICES = 8


class OracleSizeError(GraphError):
    """The input is larger than the brute-force guard allows."""


def _as_graph(g: Graph | BipartiteGraph) -> Graph:
    return g.underlying() if isinstance(g, BipartiteGraph) else g


def _guard(g: Graph, limit: int, override: bool) -> None:
    if not override and g.vertex_count > limit:
        raise OracleSizeError(
            f"graph has {g.vertex_count} vertices; brute force is limited to {limit} "
            "(pass override=True to run anyway)"
        )


@dataclass(frozen=True)
class Cycle:
    """A cycle as a vertex sequence; the last vertex is adjacent to the first.

    Canonical form starts at the smallest vertex and continues towards the
    smaller of its two cycle neighbours.
    """

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> set[tuple[int, int]]:
        vs = self.vertices
        return {tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))}

    @classmethod
    def canonical(cls, vertices: Sequence[int]) -> Cycle:
        vs = list(vertices)
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if len(vs) > 2 and vs[-1] < vs[1]:
            vs = [vs[0]] + vs[:0:-1]
        return cls(tuple(vs))


def iter_cycles(
    g: Graph | BipartiteGraph, min_len: int = 3, override: bool = False
) -> Iterator[Cycle]:
    """Yield every cycle of length >= ``min_len`` once, in canonical form.

    Cycles on a :class:`BipartiteGraph` use the flattened ids of
    :meth:`BipartiteGraph.underlying`.
    """
    h = _as_graph(g)
    _guard(h, MAX_CYCLE_VERTICES, override)
    adj = [sorted(s) for s in h.adjacency]
    min_len = max(min_len, 3)
    for root in range(h.vertex_count):
        path = [root]
        on_path = {root}

        def extend(u: int) -> Iterator[Cycle]:
            for w in adj[u]:
                if w == root:
                    if len(path) >= min_len and path[1] < path[-1]:
                        yield Cycle(tuple(path))
                elif w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend(w)
                    path.pop()
                    on_path.discard(w)

        yield from extend(root)


def enumerate_cycles(
    g: Graph | BipartiteGraph, min_len: int = 3, override: bool = False
) -> list[Cycle]:
    return sorted(iter_cycles(g, min_len, override), key=lambda c: (len(c), c.vertices))


def chords_of_cycle(g: Graph | BipartiteGraph, c: Cycle) -> set[tuple[int, int]]:
    h = _as_graph(g)
    vs = c.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise GraphError(f"{vs} is not a cycle: needs >= 3 distinct vertices")
    cycle_edges = c.edges()
    for u, v in cycle_edges:
        if not (0 <= u < h.vertex_count and 0 <= v < h.vertex_count) or not h.has_edge(u, v):
            raise GraphError(f"{vs} is not a cycle of the graph: ({u}, {v}) missing")
    return {
        (u, v) for u, v in combinations(sorted(vs), 2)
        if h.has_edge(u, v) and (u, v) not in cycle_edges
    }


def definition_k_chordal(b: BipartiteGraph, k: int, override: bool = False) -> bool:
    """Every cycle of length >= 6 has at least ``k`` chords."""
    return all(len(chords_of_cycle(b, c)) >= k for c in iter_cycles(b, 6, override))


def is_trivial(b: BipartiteGraph, override: bool = False) -> bool:
    """No cycle of length 6 or more."""
    return next(iter_cycles(b, 6, override), None) is None


def _bipartite_isomorphic(a: BipartiteGraph, b: BipartiteGraph) -> bool:
    # part-preserving bijections in both orientations
    if a.edge_count != b.edge_count:
        return False
    targets = [b]
    if b.x_count == b.y_count:
        targets.append(BipartiteGraph(b.y_count, b.x_count, frozenset((j, i) for i, j in b.edges)))
    for t in targets:
        if (a.x_count, a.y_count) != (t.x_count, t.y_count):
            continue
        for px in permutations(range(a.x_count)):
            for py in permutations(range(a.y_count)):
                if all((px[i], py[j]) in t.edges for i, j in a.edges):
                    return True
    return False


def contains_induced_double_square(b: BipartiteGraph, override: bool = False) -> bool:
    """Some six vertices induce the domino (two 4-cycles sharing an edge).

    The domino is connected with parts of size 3 and 3, so only subsets with
    three vertices on each side can induce it.
    """
    _guard(b.underlying(), MAX_CYCLE_VERTICES, override)
    target = domino()
    for xs in combinations(range(b.x_count), 3):
        for ys in combinations(range(b.y_count), 3):
            xi = {x: i for i, x in enumerate(xs)}
            yi = {y: i for i, y in enumerate(ys)}
            sub = frozenset((xi[x], yi[y]) for x, y in b.edges if x in xi and y in yi)
            if len(sub) == target.edge_count and _bipartite_isomorphic(BipartiteGraph(3, 3, sub), target):
                return True
    return False


def _closed_sets(g: Graph) -> list[frozenset[int]]:
    return [g.closed_neighborhood(v) for v in g.vertices()]


def _violates(order: Sequence[int], closed: list[frozenset[int]], newest: int | None = None) -> bool:
    """Does some quadruple i < j, k < l break the strong-elimination rule?

    The rule: if v_k, v_l are in N[v_i] and v_j is in N[v_k], then v_l is in
    N[v_j].  With ``newest`` set, only quadruples with j or l equal to it are
    examined (the others were checked on a shorter prefix).
    """
    n = len(order)
    for i in range(n):
        ni = closed[order[i]]
        for k in range(n):
            if order[k] not in ni:
                continue
            nk = closed[order[k]]
            for l in range(k + 1, n):
                if order[l] not in ni:
                    continue
                for j in range(i + 1, n):
                    if newest is not None and j != newest and l != newest:
                        continue
                    if order[j] in nk and order[l] not in closed[order[j]]:
                        return True
    return False


def verify_strong_elimination_ordering(g: Graph, ordering: Sequence[int]) -> bool:
    if sorted(ordering) != list(g.vertices()):
        raise GraphError(f"{list(ordering)} is not a permutation of the vertices")
    return not _violates(list(ordering), _closed_sets(g))


def exists_strong_elimination_ordering(g: Graph, override: bool = False) -> bool:
    """Search all orderings, pruning any prefix that already breaks the rule."""
    _guard(g, MAX_ORDERING_VERTICES, override)
    closed = _closed_sets(g)
    n = g.vertex_count
    prefix: list[int] = []
    used = [False] * n

    def grow() -> bool:
        if len(prefix) == n:
            return True
        for v in range(n):
            if used[v]:
                continue
            prefix.append(v)
            used[v] = True
            if not _violates(prefix, closed, len(prefix) - 1) and grow():
                return True
            prefix.pop()
            used[v] = False
        return False

    return grow()


def is_chordal_bruteforce(g: Graph, override: bool = False) -> bool:
    """Every cycle of length >= 4 has a chord."""
    return all(chords_of_cycle(g, c) for c in iter_cycles(g, 4, override))


def _has_strong_chord(g: Graph, c: Cycle) -> bool:
    pos = {v: i for i, v in enumerate(c.vertices)}
    return any((pos[u] - pos[v]) % 2 for u, v in chords_of_cycle(g, c))


def is_strongly_chordal_bruteforce(g: Graph, override: bool = False) -> bool:
    """Chordal, and every even cycle of length >= 6 has a chord at odd distance."""
    if not is_chordal_bruteforce(g, override):
        return False
    return all(_has_strong_chord(g, c) for c in iter_cycles(g, 6, override) if len(c) % 2 == 0)
