"""Compare the numba and numpy elimination kernels.

    python benchmarks/bench_backends.py [--k 2] [--max-n 14] [--repeat 3]

For each K_{n,n} and a seeded random n x n graph, runs ``check`` once per
backend (after a warm-up that triggers JIT compilation) and prints the best
time of ``--repeat`` runs plus the numpy/numba ratio.
"""

import argparse

from kchordal import _kernels
from kchordal.formats import GenSpec, generate
from kchordal.recognition import check


def best_ns(b, k, backend, repeat):
    runs = [check(b, k, backend=backend) for _ in range(repeat)]
    verdicts = {r.verdict for r in runs}
    assert len(verdicts) == 1
    return min(r.elapsed_ns for r in runs), runs[0]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    for backend in _kernels.BACKENDS:
        check(generate(GenSpec("domino")), 1, backend=backend)

    print(f"{'graph':>14} {'s':>4} {'t':>5} {'sub':>6} {'numba ms':>10} {'numpy ms':>10} {'ratio':>7}")
    for n in range(4, args.max_n + 1, 2):
        for name, spec in (
            (f"K{n},{n}", GenSpec("complete-bipartite", (n, n))),
            (f"rand{n}x{n}", GenSpec("random", (n, n), seed=n, p=(1, 2))),
        ):
            b = generate(spec)
            t_numba, r = best_ns(b, args.k, "numba", args.repeat)
            t_numpy, r2 = best_ns(b, args.k, "numpy", args.repeat)
            assert r.verdict == r2.verdict and r.witness == r2.witness
            print(
                f"{name:>14} {r.s:>4} {r.t:>5} {r.subchecks:>6} "
                f"{t_numba / 1e6:>10.2f} {t_numpy / 1e6:>10.2f} {t_numpy / t_numba:>7.1f}"
            )


if __name__ == "__main__":
    main()
