"""Closed-form parametric zeroes ``g_1 >= ... >= g_n`` of a min-plus polynomial.

Four independent routes compute the same value:

* :func:`g_numeric`: min over left endpoints of the max slope to the right;
* :func:`g_numeric_dual`: max over right endpoints of the min slope to the left;
* :func:`continuation_value`: the slope of the cell edge bracketing ``[k-1, k]``;
* :func:`all_roots`: a walk along the Newton polygon edges.

The slope of a pair ``p < q`` is the tie value ``(x_p - x_q) / (q - p)``.
"""
from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from typing import Sequence

from . import kernels
from .arith import common_denominator
from .newton import build_polygon, classify_cell

__all__ = ["RootIndexError", "g_numeric", "g_numeric_dual", "all_roots", "continuation_value"]


class RootIndexError(ValueError):
    pass


def _check(coeffs: Sequence, k: int) -> list[Fraction]:
    coeffs = [Fraction(c) for c in coeffs]
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("need at least two coefficients")
    if not isinstance(k, int) or not 1 <= k <= n:
        raise RootIndexError(f"root index k={k} outside 1..{n}")
    return coeffs


def g_numeric(coeffs: Sequence, k: int) -> Fraction:
    coeffs = _check(coeffs, k)
    X, d = common_denominator(coeffs)
    num, den = kernels.minmax_slope(X, k)
    return Fraction(num, den * d)


def g_numeric_dual(coeffs: Sequence, k: int) -> Fraction:
    coeffs = _check(coeffs, k)
    X, d = common_denominator(coeffs)
    num, den = kernels.maxmin_slope(X, k)
    return Fraction(num, den * d)


def all_roots(coeffs: Sequence) -> list[Fraction]:
    """``[g_1, ..., g_n]`` read off the Newton polygon in one pass."""
    out: list[Fraction] = []
    for e in build_polygon(coeffs).edges:
        out.extend([e.root] * e.multiplicity)
    return out


def continuation_value(coeffs: Sequence, k: int) -> Fraction:
    coeffs = _check(coeffs, k)
    bps = classify_cell(coeffs).breakpoints
    # smallest breakpoint >= k; its predecessor is then <= k-1
    t = bisect_left(bps, k)
    i, j = bps[t - 1], bps[t]
    return (coeffs[i] - coeffs[j]) / (j - i)
