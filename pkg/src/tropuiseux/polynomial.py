"""Min-plus univariate polynomials ``f(Y) = min_k (x_k + k*Y)``.

The brute-force :func:`oracle_roots` deliberately avoids any hull code so
the Newton polygon and closed-form root formulas can be checked against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import parse_vector

__all__ = [
    "TropicalPolynomial",
    "RootMultiset",
    "eval_tropical",
    "is_tropical_zero",
    "oracle_roots",
    "expand_multiset",
]


@dataclass(frozen=True)
class TropicalPolynomial:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError(f"a tropical polynomial needs degree >= 1, got {len(coeffs)} coefficient(s)")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def parse(cls, text: str) -> "TropicalPolynomial":
        return cls(tuple(parse_vector(text)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, y) -> Fraction:
        return eval_tropical(self, y)[0]


RootMultiset = list[tuple[Fraction, int]]
"""``[(value, multiplicity), ...]`` with values strictly decreasing."""


def _as_poly(f) -> TropicalPolynomial:
    return f if isinstance(f, TropicalPolynomial) else TropicalPolynomial(tuple(f))


def eval_tropical(f, y) -> tuple[Fraction, frozenset[int]]:
    """Value of ``f`` at ``y`` and the set of indices attaining the minimum."""
    f = _as_poly(f)
    y = Fraction(y)
    terms = [x + k * y for k, x in enumerate(f.coeffs)]
    value = min(terms)
    return value, frozenset(k for k, t in enumerate(terms) if t == value)


def is_tropical_zero(f, y) -> bool:
    return len(eval_tropical(f, y)[1]) >= 2


def oracle_roots(f) -> RootMultiset:
    """All tropical zeroes of ``f`` by testing every pairwise tie point.

    The multiplicity of a zero ``y`` is ``max(argmin) - min(argmin)``.
    """
    f = _as_poly(f)
    x = f.coeffs
    n = f.degree
    candidates = {(x[p] - x[q]) / (q - p) for p in range(n + 1) for q in range(p + 1, n + 1)}
    out = []
    for y in sorted(candidates, reverse=True):
        _, argmin = eval_tropical(f, y)
        if len(argmin) >= 2:
            out.append((y, max(argmin) - min(argmin)))
    total = sum(m for _, m in out)
    if total != n:
        raise AssertionError(f"oracle multiplicities sum to {total}, expected {n}")
    return out


def expand_multiset(ms: Iterable[tuple[Fraction, int]]) -> list[Fraction]:
    """``[(v, m), ...]`` -> ``[v]*m + ...`` in the given order."""
    return [v for v, m in ms for _ in range(m)]
