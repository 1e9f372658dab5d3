"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Inputs come in two flavours: small integers (the compiled 64-bit path) and
~100-bit integers, which is what common denominators of random rationals
look like.
"""
import argparse
import importlib
import random
import timeit

from tropuiseux import _kernels_py
from tropuiseux.puiseux import build_g_expr, to_quotient_form


def _inputs(seed=0, count=200, n=12):
    rng = random.Random(seed)
    small = [[rng.randint(-1000, 1000) for _ in range(n + 1)] for _ in range(count)]
    big = [[rng.randint(-(2**100), 2**100) for _ in range(n + 1)] for _ in range(count)]
    return {"small ints": small, "100-bit ints": big}


def _workloads(mod, vectors):
    def hull():
        for X in vectors:
            mod.lower_hull(X)

    def slopes():
        for X in vectors:
            for k in range(1, len(X)):
                mod.minmax_slope(X, k)
                mod.maxmin_slope(X, k)

    return {"lower_hull": hull, "min/max slopes": slopes}


def _affine_workload(mod):
    q = to_quotient_form(build_g_expr(6, 3))
    packed = q._pack(q.den)
    rng = random.Random(1)
    points = [[rng.randint(-10**6, 10**6) for _ in range(7)] for _ in range(200)]
    rows, consts, _ = packed

    def run():
        for X in points:
            mod.min_affine(rows, consts, X, 997)

    return run, len(rows)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    try:
        compiled = importlib.import_module("tropuiseux._kernels")
    except ImportError:
        raise SystemExit("compiled kernels not built; run `pip install -e . --no-build-isolation`")

    rows = []
    for label, vectors in _inputs().items():
        py = _workloads(_kernels_py, vectors)
        cy = _workloads(compiled, vectors)
        for name in py:
            tp = min(timeit.repeat(py[name], number=1, repeat=args.repeat))
            tc = min(timeit.repeat(cy[name], number=1, repeat=args.repeat))
            rows.append((f"{name} [{label}]", tp, tc))
    run_py, nforms = _affine_workload(_kernels_py)
    run_cy, _ = _affine_workload(compiled)
    tp = min(timeit.repeat(run_py, number=1, repeat=args.repeat))
    tc = min(timeit.repeat(run_cy, number=1, repeat=args.repeat))
    rows.append((f"min_affine [{nforms} forms x 200 pts]", tp, tc))

    print(f"{'kernel':42s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, tp, tc in rows:
        print(f"{name:42s} {tp * 1e3:10.2f} {tc * 1e3:10.2f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
