"""Newton polygons of min-plus polynomials and the cells ``P_S`` they induce.

A coefficient point ``x`` has Newton polygon ``N_x``, the lower hull of the
points ``(k, x_k)``. Its strict interior vertices ``S`` name the cell of
coefficient space that ``x`` lies in; there is one cell for every subset of
``{1, ..., n-1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .arith import common_denominator

__all__ = [
    "Edge",
    "NewtonPolygon",
    "CellSignature",
    "CellCapError",
    "DEFAULT_CELL_CAP",
    "build_polygon",
    "polygon_roots",
    "classify_cell",
    "cell_witness",
    "enumerate_cells",
]

DEFAULT_CELL_CAP = 12


class CellCapError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    root: Fraction

    @property
    def multiplicity(self) -> int:
        return self.j - self.i


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple[tuple[int, Fraction], ...]
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def degree(self) -> int:
        return len(self.points) - 1

    def to_json(self) -> dict:
        from .arith import rat_format

        return {
            "vertices": list(self.vertices),
            "edges": [
                {"i": e.i, "j": e.j, "root": rat_format(e.root), "mult": e.multiplicity}
                for e in self.edges
            ],
        }


@dataclass(frozen=True, order=True)
class CellSignature:
    n: int
    S: tuple[int, ...]

    def __post_init__(self):
        S = tuple(sorted(set(self.S)))
        if self.n < 1:
            raise ValueError(f"degree must be >= 1, got {self.n}")
        bad = [s for s in S if not 1 <= s <= self.n - 1]
        if bad:
            raise ValueError(f"cell indices {bad} outside 1..{self.n - 1}")
        object.__setattr__(self, "S", S)

    @property
    def breakpoints(self) -> tuple[int, ...]:
        """``S`` together with the endpoints ``0`` and ``n``."""
        return (0, *self.S, self.n)

    @classmethod
    def full(cls, n: int) -> "CellSignature":
        return cls(n, tuple(range(1, n)))


def build_polygon(coeffs: Sequence) -> NewtonPolygon:
    coeffs = [Fraction(c) for c in coeffs]
    if len(coeffs) < 2:
        raise ValueError("a Newton polygon needs at least two points")
    X, _ = common_denominator(coeffs)
    verts = kernels.lower_hull(X)
    edges = tuple(
        Edge(i, j, (coeffs[i] - coeffs[j]) / (j - i)) for i, j in zip(verts, verts[1:])
    )
    return NewtonPolygon(tuple(enumerate(coeffs)), tuple(verts), edges)


def polygon_roots(polygon: NewtonPolygon) -> list[tuple[Fraction, int]]:
    """Edge roots with multiplicities, in descending order of value."""
    # strict convexity makes the edge roots strictly decreasing already
    return [(e.root, e.multiplicity) for e in polygon.edges]


def classify_cell(coeffs: Sequence) -> CellSignature:
    poly = build_polygon(coeffs)
    return CellSignature(poly.degree, poly.vertices[1:-1])


def cell_witness(n: int, S: Iterable[int]) -> list[Fraction]:
    """A coefficient point whose Newton polygon has strict vertex set ``S ∪ {0, n}``.

    Breakpoints sit on the parabola ``k**2``; every other index is lifted one
    unit above the chord joining its neighbouring breakpoints.
    """
    cell = CellSignature(n, tuple(S))
    bps = cell.breakpoints
    x = [Fraction(0)] * (n + 1)
    for a, b in zip(bps, bps[1:]):
        ya, yb = Fraction(a * a), Fraction(b * b)
        x[a], x[b] = ya, yb
        for k in range(a + 1, b):
            x[k] = ya + (yb - ya) * (k - a) / (b - a) + 1
    return x


def _subsets(n: int):
    # binary-counter order: bit s-1 of the counter selects index s
    interior = range(1, n)
    for mask in range(1 << max(n - 1, 0)):
        yield tuple(s for s in interior if mask >> (s - 1) & 1)


def enumerate_cells(n: int, cap: int = DEFAULT_CELL_CAP) -> list[tuple[CellSignature, list[Fraction]]]:
    """Every cell for degree ``n`` with a verified witness point."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n > cap:
        raise CellCapError(
            f"n={n} exceeds the enumeration cap {cap} ({2 ** (n - 1)} cells); raise it with --cap-cells"
        )
    out = []
    for S in _subsets(n):
        cell = CellSignature(n, S)
        w = cell_witness(n, S)
        got = classify_cell(w)
        if got != cell:
            raise AssertionError(f"witness {w} classified as {got.S}, expected {cell.S}")
        out.append((cell, w))
    return out
