"""Exit criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion is
printed in the terminal summary. All comparisons are exact.
"""
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from tropuiseux.newton import build_polygon, cell_witness, classify_cell, enumerate_cells, polygon_roots
from tropuiseux.polynomial import is_tropical_zero, oracle_roots
from tropuiseux.puiseux import (
    build_g_expr,
    build_g_expr_dual,
    eval_expr,
    substitute,
    to_quotient_form,
)
from tropuiseux.roots import all_roots, continuation_value, g_numeric, g_numeric_dual
from tropuiseux.sampling import random_coeffs, random_expr

SEED = 20240101
N_SAMPLES = 1000
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def samples():
    rng = random.Random(SEED)
    return [random_coeffs(rng, rng.randint(1, 12), bound=1000) for _ in range(N_SAMPLES)]


@pytest.mark.criterion(1, "zero property on 1000 random polynomials, n in 1..12, < 10 s")
def test_zero_property(samples):
    t0 = time.perf_counter()
    bad = [(x, k) for x in samples for k in range(1, len(x)) if not is_tropical_zero(x, g_numeric(x, k))]
    elapsed = time.perf_counter() - t0
    assert not bad
    assert elapsed < 10.0, f"took {elapsed:.2f} s"


@pytest.mark.criterion(2, "g_numeric = g_numeric_dual = continuation_value = all_roots[k]")
def test_triple_agreement(samples):
    for x in samples:
        walk = all_roots(x)
        for k in range(1, len(x)):
            assert g_numeric(x, k) == g_numeric_dual(x, k) == continuation_value(x, k) == walk[k - 1], (x, k)


@pytest.mark.criterion(3, "polygon roots equal brute-force oracle roots as multisets")
def test_oracle_equivalence(samples):
    for x in samples:
        assert polygon_roots(build_polygon(x)) == oracle_roots(x), x


@pytest.mark.criterion(4, "cell census: 2^(n-1) cells with verified witnesses for n <= 8, < 5 s")
def test_cell_census():
    t0 = time.perf_counter()
    for n in range(1, 9):
        cells = enumerate_cells(n)
        assert len(cells) == 2 ** (n - 1)
        assert len({c.S for c, _ in cells}) == 2 ** (n - 1)
        for cell, w in cells:
            assert classify_cell(w) == cell
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0, f"took {elapsed:.2f} s"


@pytest.mark.criterion(5, "symbolic g_k (primal, dual, quotient) equals g_numeric at 500 points, n <= 6")
def test_symbolic_soundness():
    rng = random.Random(SEED + 5)
    for n in range(1, 7):
        for k in range(1, n + 1):
            primal = build_g_expr(n, k)
            dual = build_g_expr_dual(n, k)
            quot = to_quotient_form(primal)
            for _ in range(500):
                x = random_coeffs(rng, n, bound=1000)
                g = g_numeric(x, k)
                assert eval_expr(primal, x) == g, (n, k, x)
                assert eval_expr(dual, x) == g, (n, k, x)
                assert quot.evaluate(x) == g, (n, k, x)


@pytest.mark.criterion(6, "closure: substituted g_k is a tropical zero, 20 configs x 100 points")
def test_closure():
    rng = random.Random(SEED + 6)
    for _ in range(20):
        m = rng.randint(1, 4)
        r = rng.randint(0, 3)
        k = rng.randint(1, m)
        subs = [random_expr(rng, r + 1, depth=3) for _ in range(m + 1)]
        composed = substitute(build_g_expr(m, k), subs)
        for _ in range(100):
            z = random_coeffs(rng, r, bound=1000)
            cs = [eval_expr(s, z) for s in subs]
            assert is_tropical_zero(cs, eval_expr(composed, z)), (m, r, k, z)


@pytest.mark.criterion(7, "open cell: all_roots = [x_(k-1) - x_k] on full-cell witnesses")
def test_open_cell_formula():
    for n in range(1, 13):
        x = cell_witness(n, range(1, n))
        assert classify_cell(x).S == tuple(range(1, n))
        assert all_roots(x) == [x[k - 1] - x[k] for k in range(1, n + 1)]


GOLDEN_INPUTS = {
    "roots_0_0_2_1": ["roots", "0,0,2,1"],
    "roots_0_1_0": ["roots", "0,1,0"],
    "formula_2_1_quotient": ["formula", "2", "1", "--form", "quotient"],
    "formula_2_2_dual": ["formula", "2", "2", "--form", "dual"],
    "cells_2": ["cells", "2"],
}


@pytest.mark.criterion(8, "CLI golden files byte-identical across runs (5 inputs)")
def test_cli_golden():
    for name, argv in GOLDEN_INPUTS.items():
        runs = [
            subprocess.run([sys.executable, "-m", "tropuiseux", *argv], capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        assert runs[0] == runs[1] == (GOLDEN / f"{name}.json").read_bytes(), name
