"""Command-line interface: ``kchordal check | gen | bench``.

Exit codes: 0 when the checked property holds, 1 when it fails, 2 on any
usage, parse or internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from typing import Sequence

from . import _kernels, oracle
from .formats import FAMILIES, GenSpec, ParseError, generate, parse, render
from .graph import BipartiteGraph, GraphError
from .recognition import CheckReport, check

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

BENCH_FIELDS = ("family", "n", "backend", "s", "t", "k", "verdict", "subchecks", "elapsed_ns")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _fraction(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"([0-9]+)/([1-9][0-9]*)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected NUM/DEN, got {text!r}")
    return int(m[1]), int(m[2])


def _range(text: str) -> range:
    m = re.fullmatch(r"([0-9]+)\.\.([0-9]+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected A..B with non-negative integers, got {text!r}")
    return range(int(m[1]), int(m[2]) + 1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kchordal", description="k-chordal bipartite graph recognition")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="decide k-chordal bipartiteness of a graph file")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--oracle", action="store_true", help="also run the brute-force definition check")
    c.add_argument("--witness", action="store_true", help="print the failure certificate")
    c.add_argument("--json", action="store_true", help="emit one JSON record")
    c.add_argument("--threads", type=int, default=1)
    c.add_argument("--format", choices=("auto", "bip", "edgelist"), default="auto")
    c.add_argument("--backend", choices=_kernels.BACKENDS, default=None)
    c.add_argument("file")

    g = sub.add_parser("gen", help="write a named graph in bip format")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--p", type=_fraction, default=(1, 2), help="edge density NUM/DEN (random)")
    g.add_argument("-o", "--output", default="-")

    b = sub.add_parser("bench", help="time check() over a family of graphs, CSV to stdout")
    b.add_argument("--family", choices=FAMILIES, required=True)
    b.add_argument("--n", type=_range, required=True, help="size range A..B (inclusive)")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--json", action="store_true", help="JSON lines instead of CSV")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--p", type=_fraction, default=(1, 2))
    b.add_argument("--backend", choices=(*_kernels.BACKENDS, "both"), default=None)
    return p


def report_record(report: CheckReport, b: BipartiteGraph) -> dict:
    w = report.witness
    witness = None
    if w is not None:
        witness = {
            "kind": w.kind,
            "deleted_edges": [[i + 1, j + 1] for i, j in w.deleted_edges],
            "stuck_vertices": [b.vertex_name(v) for v in w.stuck_vertices],
        }
    return {
        "property": report.property,
        "k": report.k,
        "verdict": report.verdict,
        "s": report.s,
        "t": report.t,
        "subchecks": report.subchecks,
        "elapsed_ns": report.elapsed_ns,
        "witness": witness,
    }


def _verdict_word(v: bool) -> str:
    return "true" if v else "false"


def run_check(args: argparse.Namespace, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    b = parse(args.file, args.format)
    report = check(b, args.k, threads=args.threads, backend=args.backend)
    rec = report_record(report, b)
    agree = True
    oracle_line = None
    if args.oracle:
        expected = oracle.definition_k_chordal(b, args.k)
        agree = expected == report.verdict
        oracle_line = (
            f"ORACLE {report.property} k={args.k} {_verdict_word(expected)} "
            + ("agree" if agree else "DISAGREE")
        )
    if args.json:
        print(json.dumps(rec, separators=(",", ":")), file=out)
        if oracle_line:
            print(oracle_line, file=err)
    else:
        print(f"RESULT {report.property} k={args.k} {_verdict_word(report.verdict)}", file=out)
        print(
            f"STATS s={report.s} t={report.t} subchecks={report.subchecks} "
            f"elapsed_ns={report.elapsed_ns}",
            file=out,
        )
        if args.witness and rec["witness"] is not None:
            w = rec["witness"]
            trail = ",".join(f"x{i}-y{j}" for i, j in w["deleted_edges"]) or "-"
            print(
                f"WITNESS kind={w['kind']} deleted={trail} stuck={','.join(w['stuck_vertices'])}",
                file=out,
            )
        if oracle_line:
            print(oracle_line, file=out)
    if not agree:
        print("error: recognition and oracle disagree", file=err)
        return EXIT_ERROR
    return EXIT_TRUE if report.verdict else EXIT_FALSE


def run_gen(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    spec = GenSpec(args.family, tuple(args.params), seed=args.seed, p=args.p)
    b = generate(spec)
    label = " ".join([args.family, *map(str, args.params)])
    if args.family == "random":
        label += f" p={args.p[0]}/{args.p[1]} seed={args.seed}"
    text = render(b, comment=label)
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return EXIT_TRUE


def bench_instances(family: str, ns: range, seed: int, p: tuple[int, int]):
    """``(n, graph)`` pairs; ``n`` is the cycle length for ``cycle`` (odd
    values are skipped), the part size for ``complete-bipartite`` (K_{n,n})
    and ``random`` (n x n), the leaf count for ``star``, and ignored for
    ``domino``."""
    for n in ns:
        if family == "cycle":
            if n < 4 or n % 2:
                continue
            yield n, generate(GenSpec("cycle", (n,)))
        elif family == "complete-bipartite":
            yield n, generate(GenSpec(family, (n, n)))
        elif family == "star":
            yield n, generate(GenSpec(family, (n,)))
        elif family == "domino":
            yield n, generate(GenSpec(family))
        else:
            yield n, generate(GenSpec(family, (n, n), seed=seed + n, p=p))


def bench_rows(family: str, ns: range, k: int, backends: Sequence[str], seed: int = 0,
               p: tuple[int, int] = (1, 2)) -> list[dict]:
    for backend in backends:
        # compile (numba) or warm caches outside the timed region
        check(generate(GenSpec("domino")), 1, backend=backend)
    rows = []
    for n, b in bench_instances(family, ns, seed, p):
        for backend in backends:
            r = check(b, k, backend=backend)
            rows.append({
                "family": family, "n": n, "backend": backend, "s": r.s, "t": r.t, "k": k,
                "verdict": _verdict_word(r.verdict), "subchecks": r.subchecks,
                "elapsed_ns": r.elapsed_ns,
            })
    return rows


def run_bench(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    if args.backend == "both":
        backends = [b for b in _kernels.BACKENDS if b != "numba" or _kernels.HAVE_NUMBA]
    else:
        backends = [args.backend or _kernels.DEFAULT_BACKEND]
    rows = bench_rows(args.family, args.n, args.k, backends, args.seed, args.p)
    if args.json:
        for row in rows:
            print(json.dumps(row, separators=(",", ":")), file=out)
    else:
        w = csv.DictWriter(out, fieldnames=BENCH_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return EXIT_TRUE


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "check":
            return run_check(args)
        if args.command == "gen":
            return run_gen(args)
        return run_bench(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
