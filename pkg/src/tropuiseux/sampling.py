"""Seeded random inputs for verification runs and tests."""
from __future__ import annotations

import random
from fractions import Fraction

from .puiseux import Affine, Expr, Max, Min, Neg, Scale, Sum

__all__ = ["random_rational", "random_coeffs", "random_tie_heavy_coeffs", "random_expr"]


def random_rational(rng: random.Random, bound: int = 1000) -> Fraction:
    """Numerator in ``[-bound, bound]``, denominator in ``[1, bound]``."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_coeffs(rng: random.Random, n: int, bound: int = 1000) -> list[Fraction]:
    return [random_rational(rng, bound) for _ in range(n + 1)]


def random_tie_heavy_coeffs(rng: random.Random, n: int) -> list[Fraction]:
    """Small integers, so collinear hull points and repeated roots are common."""
    return [Fraction(rng.randint(-2, 2)) for _ in range(n + 1)]


def _random_affine(rng: random.Random, nvars: int) -> Affine:
    coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.7 else Fraction(0)
              for _ in range(nvars)]
    return Affine(tuple(coeffs), Fraction(rng.randint(-5, 5), rng.randint(1, 4)))


def random_expr(rng: random.Random, nvars: int, depth: int = 3) -> Expr:
    """A random tree of at most ``depth`` levels above its affine leaves."""
    if depth <= 0 or rng.random() < 0.25:
        return _random_affine(rng, nvars)
    kind = rng.choice(("min", "max", "sum", "neg", "scale"))
    if kind == "neg":
        return Neg(random_expr(rng, nvars, depth - 1))
    if kind == "scale":
        return Scale(Fraction(rng.randint(1, 5), rng.randint(1, 5)), random_expr(rng, nvars, depth - 1))
    args = tuple(random_expr(rng, nvars, depth - 1) for _ in range(rng.randint(1, 3)))
    return {"min": Min, "max": Max, "sum": Sum}[kind](args)
