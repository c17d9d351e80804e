"""Reading and writing graph files, and the named-family generator.

``bip`` files (1-based indices, single-space separated, one record per line)::

    # optional comments
    b <x_count> <y_count> <edge_count>
    e <i> <j>
    ...

``edgelist`` files hold ``<u> <v>`` lines of positive integer labels; the two
parts are recovered by 2-coloring, with vertices numbered in order of first
appearance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

import numpy as np

from . import graph as G
from .graph import BipartiteGraph, Graph, GraphError

Format = Literal["bip", "edgelist"]
FAMILIES = ("cycle", "complete-bipartite", "domino", "star", "random")

_NUM = r"(0|[1-9][0-9]*)"
_HEADER = re.compile(rf"b {_NUM} {_NUM} {_NUM}")
_EDGE = re.compile(rf"e {_NUM} {_NUM}")
_PAIR = re.compile(r"\s*([0-9]+)\s+([0-9]+)\s*")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, odd_cycle: list[int] | None = None):
        self.line = line
        self.odd_cycle = odd_cycle
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_bip(text: str) -> BipartiteGraph:
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, line in enumerate(lines, 1):
        if line.startswith("#"):
            continue
        if header is None:
            m = _HEADER.fullmatch(line)
            if not m:
                raise ParseError(f"expected header 'b <x_count> <y_count> <edge_count>', got {line!r}", lineno)
            header = (int(m[1]), int(m[2]), int(m[3]))
            continue
        m = _EDGE.fullmatch(line)
        if not m:
            raise ParseError(f"expected edge record 'e <i> <j>', got {line!r}", lineno)
        i, j = int(m[1]), int(m[2])
        if not (1 <= i <= header[0] and 1 <= j <= header[1]):
            raise ParseError(f"edge ({i}, {j}) outside 1..{header[0]} x 1..{header[1]}", lineno)
        if (i, j) in seen:
            raise ParseError(f"duplicate edge ({i}, {j})", lineno)
        seen.add((i, j))
        edges.append((i - 1, j - 1))
    if header is None:
        raise ParseError("missing header line")
    if len(edges) != header[2]:
        raise ParseError(f"header declares {header[2]} edges but {len(edges)} records follow")
    return BipartiteGraph.from_parts(header[0], header[1], edges)


def parse_edgelist(text: str) -> BipartiteGraph:
    index: dict[int, int] = {}
    labels: list[int] = []
    pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _PAIR.fullmatch(line)
        if not m:
            raise ParseError(f"expected '<u> <v>', got {line!r}", lineno)
        u, v = int(m[1]), int(m[2])
        if u < 1 or v < 1:
            raise ParseError("vertex labels must be positive integers", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        for lab in (u, v):
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
        pairs.append((index[u], index[v]))
    colored = G.two_color(Graph.from_edges(len(labels), pairs))
    if colored.bipartite is None:
        cyc = [labels[v] for v in colored.odd_cycle]
        raise ParseError(f"graph is not bipartite: odd cycle {cyc}", odd_cycle=cyc)
    return colored.bipartite


def parse(path: str | Path, format: Format | Literal["auto"] = "auto") -> BipartiteGraph:
    text = Path(path).read_text()
    if format == "auto":
        format = sniff(text, str(path))
    if format == "bip":
        return parse_bip(text)
    if format == "edgelist":
        return parse_edgelist(text)
    raise ParseError(f"unknown format {format!r}")


def sniff(text: str, name: str = "") -> Format:
    if name.endswith(".bip"):
        return "bip"
    for line in text.splitlines():
        if line.startswith("#") or not line.strip():
            continue
        return "bip" if line.startswith("b ") else "edgelist"
    return "bip"


def render(b: BipartiteGraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"b {b.x_count} {b.y_count} {b.edge_count}")
    out.extend(f"e {i + 1} {j + 1}" for i, j in b.sorted_edges())
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple[int, ...] = ()
    seed: int = 0
    p: tuple[int, int] = field(default=(1, 2))


_ARITY = {"cycle": 1, "complete-bipartite": 2, "domino": 0, "star": 1, "random": 2}


def generate(spec: GenSpec) -> BipartiteGraph:
    """Build a named graph.

    ``random`` draws one integer in ``[0, den)`` per pair ``(i, j)`` in
    row-major order from ``numpy.random.Generator(numpy.random.Philox(seed))``
    and keeps the edge when the draw is below ``num``.
    """
    fam, params = spec.family, spec.params
    if fam not in _ARITY:
        raise GraphError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
    if len(params) != _ARITY[fam]:
        raise GraphError(f"family {fam!r} takes {_ARITY[fam]} parameter(s), got {len(params)}")
    if any(x < 0 for x in params):
        raise GraphError("family parameters must be non-negative")
    if fam == "cycle":
        return G.cycle(params[0])
    if fam == "complete-bipartite":
        return G.complete_bipartite(*params)
    if fam == "domino":
        return G.domino()
    if fam == "star":
        return G.star(params[0])
    num, den = spec.p
    if den <= 0 or not 0 <= num <= den:
        raise GraphError(f"density {num}/{den} is not in [0, 1]")
    if not 0 <= spec.seed < 2**64:
        raise GraphError("seed must be a 64-bit unsigned integer")
    x, y = params
    rng = np.random.Generator(np.random.Philox(spec.seed))
    keep = rng.integers(0, den, size=(x, y)) < num
    return BipartiteGraph.from_parts(x, y, zip(*np.nonzero(keep)))
