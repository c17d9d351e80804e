"""Greedy vertex-elimination kernels on dense adjacency matrices.

Two interchangeable implementations of the same procedure: repeatedly find
the lowest-id vertex that is simple (or simplicial) in the graph induced on
the surviving vertices, delete it, and rescan from id 0.  The scan stops when
the graph is empty or no surviving vertex qualifies.

* ``numba``: scalar loops compiled with ``@njit``; the chain test sorts the
  neighbours' closed neighbourhoods by size and checks consecutive inclusion.
* ``numpy``: no compilation; each round tests every vertex at once with
  matrix products (pairwise comparability of closed neighbourhoods).

The default backend is numba when it imports, unless the environment variable
``KCHORDAL_DISABLE_NUMBA`` is set to anything other than ``""`` or ``"0"``.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def decorator(func):
            return func

        if args and callable(args[0]):
            return args[0]
        return decorator


DISABLE_NUMBA = os.environ.get("KCHORDAL_DISABLE_NUMBA", "") not in ("", "0")
BACKENDS = ("numba", "numpy")
DEFAULT_BACKEND = "numba" if HAVE_NUMBA and not DISABLE_NUMBA else "numpy"

SIMPLE = 0
SIMPLICIAL = 1


@njit(cache=True, nogil=True)
def _closed(adj, a, w):
    return a == w or adj[a, w] != 0


@njit(cache=True, nogil=True)
def _qualifies(adj, alive, v, mode, nbrs, sizes):
    n = adj.shape[0]
    d = 0
    for u in range(n):
        if alive[u] and adj[v, u] != 0:
            nbrs[d] = u
            d += 1
    if d <= 1:
        return True
    if mode == SIMPLICIAL:
        for p in range(d):
            for q in range(p + 1, d):
                if adj[nbrs[p], nbrs[q]] == 0:
                    return False
        return True
    for p in range(d):
        u = nbrs[p]
        s = 1
        for w in range(n):
            if alive[w] and adj[u, w] != 0:
                s += 1
        sizes[p] = s
    # insertion sort of the neighbour list by closed-neighbourhood size
    for p in range(1, d):
        key_u = nbrs[p]
        key_s = sizes[p]
        q = p - 1
        while q >= 0 and sizes[q] > key_s:
            nbrs[q + 1] = nbrs[q]
            sizes[q + 1] = sizes[q]
            q -= 1
        nbrs[q + 1] = key_u
        sizes[q + 1] = key_s
    for p in range(d - 1):
        a = nbrs[p]
        b = nbrs[p + 1]
        for w in range(n):
            if alive[w] and _closed(adj, a, w) and not _closed(adj, b, w):
                return False
    return True


@njit(cache=True, nogil=True)
def _eliminate_numba(adj, mode):
    n = adj.shape[0]
    alive = np.ones(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    nbrs = np.empty(n, dtype=np.int64)
    sizes = np.empty(n, dtype=np.int64)
    count = 0
    while count < n:
        found = -1
        for v in range(n):
            if alive[v] and _qualifies(adj, alive, v, mode, nbrs, sizes):
                found = v
                break
        if found < 0:
            break
        alive[found] = False
        order[count] = found
        count += 1
    return order, count


def _qualifying_mask(adj: np.ndarray, mode: int) -> np.ndarray:
    """Which vertices of the (already induced) graph ``adj`` qualify."""
    n = adj.shape[0]
    a = adj.astype(np.float64)
    closed = a + np.eye(n)
    if mode == SIMPLE:
        # missing[p, q] = |N[p] \ N[q]|; a pair is incomparable if both are nonzero
        missing = closed @ (1.0 - closed).T
        bad = ((missing > 0) & (missing.T > 0)).astype(np.float64)
    else:
        bad = 1.0 - closed
    # count of bad pairs among each vertex's open neighbourhood
    return np.einsum("vp,pq,vq->v", a, bad, a) == 0


def _eliminate_numpy(adj: np.ndarray, mode: int) -> tuple[np.ndarray, int]:
    n = adj.shape[0]
    alive = np.arange(n)
    order = np.empty(n, dtype=np.int64)
    count = 0
    sub = adj
    while alive.size:
        hits = np.flatnonzero(_qualifying_mask(sub, mode))
        if hits.size == 0:
            break
        k = hits[0]
        order[count] = alive[k]
        count += 1
        alive = np.delete(alive, k)
        sub = adj[np.ix_(alive, alive)]
    return order, count


def eliminate(adj: np.ndarray, mode: int = SIMPLE, backend: str | None = None) -> tuple[np.ndarray, int]:
    """Run greedy elimination on a symmetric 0/1 matrix.

    Returns ``(order, count)``: the first ``count`` entries of ``order`` are
    the deleted vertex ids in deletion order.  ``count < n`` means the scan got
    stuck and the remaining vertices form a subgraph with no qualifying vertex.
    """
    backend = backend or DEFAULT_BACKEND
    adj = np.ascontiguousarray(adj, dtype=np.uint8)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        order, count = _eliminate_numba(adj, mode)
        return order, int(count)
    if backend == "numpy":
        return _eliminate_numpy(adj, mode)
    raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")
