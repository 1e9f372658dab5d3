"""Randomized cross-checks of the root computations against each other."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .newton import CellSignature, build_polygon, classify_cell, polygon_roots
from .polynomial import expand_multiset, is_tropical_zero, oracle_roots
from .roots import all_roots, continuation_value, g_numeric, g_numeric_dual
from .sampling import random_coeffs, random_tie_heavy_coeffs

CHECKS = (
    "zero_property",
    "primal_dual",
    "three_way",
    "oracle_multiset",
    "polygon_oracle",
    "monotone",
)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_point(x: list[Fraction]) -> dict[str, bool]:
    n = len(x) - 1
    g = [g_numeric(x, k) for k in range(1, n + 1)]
    dual = [g_numeric_dual(x, k) for k in range(1, n + 1)]
    cont = [continuation_value(x, k) for k in range(1, n + 1)]
    walk = all_roots(x)
    oracle = oracle_roots(x)
    strict = all(a > b for a, b in zip(g, g[1:]))
    return {
        "zero_property": all(is_tropical_zero(x, v) for v in g),
        "primal_dual": g == dual,
        "three_way": g == cont == walk,
        "oracle_multiset": walk == expand_multiset(oracle),
        "polygon_oracle": polygon_roots(build_polygon(x)) == oracle,
        "monotone": all(a >= b for a, b in zip(g, g[1:]))
        and strict == (classify_cell(x) == CellSignature.full(n)),
    }


def run_checks(max_degree: int, trials: int, seed: int = 0) -> list[CheckResult]:
    """Every check on ``trials`` random points of degree ``1..max_degree``.

    Odd-numbered trials use small integer coefficients to exercise ties.
    """
    rng = random.Random(seed)
    results = {name: CheckResult(name) for name in CHECKS}
    for t in range(trials):
        n = rng.randint(1, max_degree)
        x = random_tie_heavy_coeffs(rng, n) if t % 2 else random_coeffs(rng, n)
        for name, ok in _check_point(x).items():
            r = results[name]
            if ok:
                r.passed += 1
            else:
                r.failures.append(x)
    return [results[name] for name in CHECKS]
