from itertools import combinations, product

import numpy as np
import pytest

from kchordal import _kernels
from kchordal.graph import BipartiteGraph, Graph


def labelled(edges, n=None):
    """Graph from 1-based figure labels (label L becomes id L-1)."""
    n = n or max(max(e) for e in edges)
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


# Figure graphs, vertices labelled as drawn.
FIG1_LEFT = labelled([(3, 5), (4, 5), (3, 4), (2, 4), (1, 3), (1, 2), (2, 5)])
FIG1_RIGHT = labelled([(3, 5), (4, 5), (3, 4), (2, 3), (2, 5), (2, 4), (1, 3), (1, 2)])
FIG2 = labelled([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (3, 5)])
FIG4 = labelled([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (3, 5), (1, 7), (2, 6)])
SUN3 = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)])

ALL_PAIRS_3X3 = list(product(range(3), range(3)))


def all_3x3_graphs():
    for mask in range(512):
        yield BipartiteGraph.from_parts(3, 3, [p for i, p in enumerate(ALL_PAIRS_3X3) if mask >> i & 1])


def random_bipartite(rng, x, y, p):
    keep = rng.random((x, y)) < p
    return BipartiteGraph.from_parts(x, y, zip(*np.nonzero(keep)))


def random_graph(rng, n, p):
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@pytest.fixture(params=[b for b in _kernels.BACKENDS if b != "numba" or _kernels.HAVE_NUMBA])
def backend(request):
    return request.param
