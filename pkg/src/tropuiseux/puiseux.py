"""Symbolic tropical Newton-Puiseux expressions.

An expression is a tree over variables ``X_0..X_m`` whose leaves are affine
forms with rational coefficients and whose inner nodes are ``Min``, ``Max``,
``Sum``, ``Neg`` and ``Scale`` (by a positive rational). Every such tree is a
piecewise-linear function and can be rewritten as a difference of two
min-of-affine functions, see :func:`to_quotient_form`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from . import kernels
from .arith import common_denominator, rat_format, rat_parse

__all__ = [
    "Affine",
    "Min",
    "Max",
    "Sum",
    "Neg",
    "Scale",
    "Expr",
    "QuotientForm",
    "ExpressionError",
    "TermCapError",
    "DEFAULT_TERM_CAP",
    "variable",
    "constant",
    "build_g_expr",
    "build_g_expr_dual",
    "eval_expr",
    "expr_min",
    "expr_max",
    "expr_sum",
    "expr_neg",
    "expr_scale",
    "to_quotient_form",
    "substitute",
    "expr_to_json",
    "expr_from_json",
    "quotient_to_json",
    "quotient_from_json",
]

DEFAULT_TERM_CAP = 100_000


class ExpressionError(ValueError):
    """Arity mismatch, bad scale factor or malformed expression JSON."""


class TermCapError(RuntimeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"quotient form exceeded {cap} affine terms per list; raise --cap-terms")


def _frac(v) -> Fraction:
    if isinstance(v, str):
        return rat_parse(v)
    return Fraction(v)


@dataclass(frozen=True)
class Affine:
    """``sum(coeffs[i] * X_i) + const``."""

    coeffs: tuple[Fraction, ...]
    const: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))
        object.__setattr__(self, "const", _frac(self.const))
        if not self.coeffs:
            raise ExpressionError("affine form needs at least one variable")

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def _key(self):
        return (self.coeffs, self.const)


def _shared_nvars(children: Sequence["Expr"], kind: str) -> int:
    if not children:
        raise ExpressionError(f"{kind} needs at least one argument")
    counts = {c.nvars for c in children}
    if len(counts) != 1:
        raise ExpressionError(f"{kind} arguments mix variable counts {sorted(counts)}")
    return counts.pop()


@dataclass(frozen=True)
class _Nary:
    args: tuple["Expr", ...]
    nvars: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        args = tuple(self.args)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "nvars", _shared_nvars(args, type(self).__name__))


class Min(_Nary):
    pass


class Max(_Nary):
    pass


class Sum(_Nary):
    pass


@dataclass(frozen=True)
class Neg:
    child: "Expr"

    @property
    def nvars(self) -> int:
        return self.child.nvars


@dataclass(frozen=True)
class Scale:
    factor: Fraction
    child: "Expr"

    def __post_init__(self):
        f = _frac(self.factor)
        if f <= 0:
            raise ExpressionError(f"scale factor must be positive, got {rat_format(f)}")
        object.__setattr__(self, "factor", f)

    @property
    def nvars(self) -> int:
        return self.child.nvars


Expr = Union[Affine, Min, Max, Sum, Neg, Scale]


def variable(i: int, nvars: int) -> Affine:
    coeffs = [0] * nvars
    coeffs[i] = 1
    return Affine(tuple(coeffs))


def constant(c, nvars: int) -> Affine:
    return Affine((0,) * nvars, c)


# -- algebra ---------------------------------------------------------------

def expr_min(args: Iterable[Expr]) -> Min:
    return Min(tuple(args))


def expr_max(args: Iterable[Expr]) -> Max:
    return Max(tuple(args))


def expr_sum(args: Iterable[Expr]) -> Sum:
    return Sum(tuple(args))


def expr_neg(e: Expr) -> Neg:
    return Neg(e)


def expr_scale(c, e: Expr) -> Scale:
    return Scale(c, e)


# -- root formulas ---------------------------------------------------------

def _slope_leaf(n: int, p: int, q: int) -> Affine:
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[p] = Fraction(1, q - p)
    coeffs[q] = Fraction(-1, q - p)
    return Affine(tuple(coeffs))


def _check_index(n: int, k: int):
    if n < 1:
        raise ExpressionError(f"degree must be >= 1, got {n}")
    if not 1 <= k <= n:
        from .roots import RootIndexError

        raise RootIndexError(f"root index k={k} outside 1..{n}")


def build_g_expr(n: int, k: int) -> Expr:
    """``g_k`` as MIN over left endpoints p < k of MAX over right endpoints q >= k."""
    _check_index(n, k)
    if n == 1:
        return _slope_leaf(1, 0, 1)
    return Min(tuple(Max(tuple(_slope_leaf(n, p, q) for q in range(k, n + 1))) for p in range(k)))


def build_g_expr_dual(n: int, k: int) -> Expr:
    """``g_k`` as MAX over right endpoints q >= k of MIN over left endpoints p < k."""
    _check_index(n, k)
    if n == 1:
        return _slope_leaf(1, 0, 1)
    return Max(tuple(Min(tuple(_slope_leaf(n, p, q) for p in range(k))) for q in range(k, n + 1)))


# -- evaluation ------------------------------------------------------------

def _eval(e: Expr, x: Sequence[Fraction]) -> Fraction:
    if isinstance(e, Affine):
        v = e.const
        for c, xi in zip(e.coeffs, x):
            if c:
                v += c * xi
        return v
    if isinstance(e, Min):
        return min(_eval(a, x) for a in e.args)
    if isinstance(e, Max):
        return max(_eval(a, x) for a in e.args)
    if isinstance(e, Sum):
        return sum((_eval(a, x) for a in e.args), Fraction(0))
    if isinstance(e, Neg):
        return -_eval(e.child, x)
    if isinstance(e, Scale):
        return e.factor * _eval(e.child, x)
    raise ExpressionError(f"unknown node {type(e).__name__}")


def eval_expr(e: Expr, x: Sequence) -> Fraction:
    if len(x) != e.nvars:
        raise ExpressionError(f"expression has {e.nvars} variables, point has {len(x)}")
    return _eval(e, [_frac(v) for v in x])


# -- quotient normal form --------------------------------------------------

# intermediate lists are dicts {coefficient vector: smallest constant}
_Forms = dict


def _put(out: _Forms, vec, c, cap: int):
    old = out.get(vec)
    if old is None:
        if len(out) >= cap:
            raise TermCapError(cap)
        out[vec] = c
    elif c < old:
        out[vec] = c


def _tprod(a: _Forms, b: _Forms, cap: int) -> _Forms:
    out: _Forms = {}
    for va, ca in a.items():
        for vb, cb in b.items():
            _put(out, tuple(x + y for x, y in zip(va, vb)), ca + cb, cap)
    return out


def _union(a: _Forms, b: _Forms, cap: int) -> _Forms:
    out = dict(a)
    for v, c in b.items():
        _put(out, v, c, cap)
    return out


def _qmin(a, b, cap):
    (n1, d1), (n2, d2) = a, b
    return _union(_tprod(n1, d2, cap), _tprod(n2, d1, cap), cap), _tprod(d1, d2, cap)


def _qmax(a, b, cap):
    # max(u, v) = u + v - min(u, v); the shared d1+d2 cancels
    (n1, d1), (n2, d2) = a, b
    return _tprod(n1, n2, cap), _union(_tprod(n1, d2, cap), _tprod(n2, d1, cap), cap)


def _qsum(a, b, cap):
    (n1, d1), (n2, d2) = a, b
    return _tprod(n1, n2, cap), _tprod(d1, d2, cap)


def _quot(e: Expr, cap: int):
    if isinstance(e, Affine):
        return {e.coeffs: e.const}, {(Fraction(0),) * e.nvars: Fraction(0)}
    if isinstance(e, Neg):
        num, den = _quot(e.child, cap)
        return den, num
    if isinstance(e, Scale):
        f = e.factor
        num, den = _quot(e.child, cap)
        scale = lambda forms: {tuple(f * c for c in v): f * c0 for v, c0 in forms.items()}
        return scale(num), scale(den)
    combine = {Min: _qmin, Max: _qmax, Sum: _qsum}.get(type(e))
    if combine is None:
        raise ExpressionError(f"unknown node {type(e).__name__}")
    acc = _quot(e.args[0], cap)
    for arg in e.args[1:]:
        acc = combine(acc, _quot(arg, cap), cap)
    return acc


class QuotientForm:
    """``min(num) - min(den)``, each side a list of affine forms.

    Entries with the same coefficient vector are collapsed to the one with
    the smaller constant; lists are kept sorted by (vector, constant). No
    other redundancy is removed, so the form is sound but not minimal.
    """

    __slots__ = ("nvars", "num", "den", "_packed")

    def __init__(self, nvars: int, num: Iterable[Affine], den: Iterable[Affine]):
        self.nvars = nvars
        self.num = self._canon(num)
        self.den = self._canon(den)
        if not self.num or not self.den:
            raise ExpressionError("quotient form lists must be nonempty")
        for a in self.num + self.den:
            if a.nvars != nvars:
                raise ExpressionError(f"affine form has {a.nvars} variables, expected {nvars}")
        self._packed = None

    @staticmethod
    def _canon(forms: Iterable[Affine]) -> tuple[Affine, ...]:
        best: dict = {}
        for a in forms:
            c = best.get(a.coeffs)
            if c is None or a.const < c:
                best[a.coeffs] = a.const
        return tuple(Affine(v, c) for v, c in sorted(best.items()))

    def __eq__(self, other):
        if not isinstance(other, QuotientForm):
            return NotImplemented
        return (self.nvars, self.num, self.den) == (other.nvars, other.num, other.den)

    def __repr__(self):
        return f"QuotientForm(nvars={self.nvars}, |num|={len(self.num)}, |den|={len(self.den)})"

    @staticmethod
    def _pack(forms: tuple[Affine, ...]):
        scale = 1
        for a in forms:
            scale = lcm(scale, a.const.denominator, *(c.denominator for c in a.coeffs))
        rows = [[int(c * scale) for c in a.coeffs] for a in forms]
        consts = [int(a.const * scale) for a in forms]
        return rows, consts, scale

    def evaluate(self, x: Sequence) -> Fraction:
        if len(x) != self.nvars:
            raise ExpressionError(f"quotient form has {self.nvars} variables, point has {len(x)}")
        if self._packed is None:
            self._packed = (self._pack(self.num), self._pack(self.den))
        X, dx = common_denominator([_frac(v) for v in x])
        (rn, cn, sn), (rd, cd, sd) = self._packed
        top = kernels.min_affine(rn, cn, X, dx)
        bottom = kernels.min_affine(rd, cd, X, dx)
        return Fraction(top * sd - bottom * sn, sn * sd * dx)


def to_quotient_form(e: Expr, cap: int = DEFAULT_TERM_CAP) -> QuotientForm:
    num, den = _quot(e, cap)
    return QuotientForm(
        e.nvars,
        (Affine(v, c) for v, c in num.items()),
        (Affine(v, c) for v, c in den.items()),
    )


# -- substitution ----------------------------------------------------------

def _subst(e: Expr, subs: Sequence[Expr], nvars: int) -> Expr:
    if isinstance(e, Affine):
        terms: list[Expr] = []
        for c, s in zip(e.coeffs, subs):
            if c > 0:
                terms.append(Scale(c, s))
            elif c < 0:
                terms.append(Neg(Scale(-c, s)))
        terms.append(constant(e.const, nvars))
        return Sum(tuple(terms))
    if isinstance(e, _Nary):
        return type(e)(tuple(_subst(a, subs, nvars) for a in e.args))
    if isinstance(e, Neg):
        return Neg(_subst(e.child, subs, nvars))
    if isinstance(e, Scale):
        return Scale(e.factor, _subst(e.child, subs, nvars))
    raise ExpressionError(f"unknown node {type(e).__name__}")


def substitute(e: Expr, subs: Sequence[Expr]) -> Expr:
    """Replace each ``X_i`` of ``e`` by the expression ``subs[i]``."""
    if len(subs) != e.nvars:
        raise ExpressionError(f"expression has {e.nvars} variables, got {len(subs)} substitutions")
    nvars = _shared_nvars(list(subs), "substitution")
    return _subst(e, subs, nvars)


# -- JSON ------------------------------------------------------------------

def _affine_json(a: Affine) -> dict:
    return {"coeffs": [rat_format(c) for c in a.coeffs], "const": rat_format(a.const)}


def _node_json(e: Expr) -> dict:
    if isinstance(e, Affine):
        return {"affine": _affine_json(e)}
    if isinstance(e, Min):
        return {"min": [_node_json(a) for a in e.args]}
    if isinstance(e, Max):
        return {"max": [_node_json(a) for a in e.args]}
    if isinstance(e, Sum):
        return {"sum": [_node_json(a) for a in e.args]}
    if isinstance(e, Neg):
        return {"neg": _node_json(e.child)}
    if isinstance(e, Scale):
        return {"scale": {"c": rat_format(e.factor), "of": _node_json(e.child)}}
    raise ExpressionError(f"unknown node {type(e).__name__}")


def expr_to_json(e: Expr) -> dict:
    return {"vars": e.nvars, "tree": _node_json(e)}


def _affine_from(d) -> Affine:
    try:
        return Affine(tuple(_frac(c) for c in d["coeffs"]), _frac(d.get("const", "0")))
    except (KeyError, TypeError) as exc:
        raise ExpressionError(f"malformed affine form {d!r}") from exc


def _node_from(d) -> Expr:
    if not isinstance(d, dict) or len(d) != 1:
        raise ExpressionError(f"expression node must be a one-key object, got {d!r}")
    (kind, body), = d.items()
    if kind == "affine":
        return _affine_from(body)
    if kind in ("min", "max", "sum"):
        if not isinstance(body, list):
            raise ExpressionError(f"{kind!r} expects a list of nodes")
        return {"min": Min, "max": Max, "sum": Sum}[kind](tuple(_node_from(a) for a in body))
    if kind == "neg":
        return Neg(_node_from(body))
    if kind == "scale":
        try:
            return Scale(_frac(body["c"]), _node_from(body["of"]))
        except (KeyError, TypeError) as exc:
            raise ExpressionError(f"malformed scale node {body!r}") from exc
    raise ExpressionError(f"unknown node kind {kind!r}")


def expr_from_json(doc: dict) -> Expr:
    try:
        tree, nvars = doc["tree"], doc["vars"]
    except (KeyError, TypeError) as exc:
        raise ExpressionError("expression document needs 'vars' and 'tree'") from exc
    e = _node_from(tree)
    if e.nvars != nvars:
        raise ExpressionError(f"document declares {nvars} variables, tree uses {e.nvars}")
    return e


def quotient_to_json(q: QuotientForm) -> dict:
    return {
        "vars": q.nvars,
        "num": [_affine_json(a) for a in q.num],
        "den": [_affine_json(a) for a in q.den],
    }


def quotient_from_json(doc: dict) -> QuotientForm:
    try:
        return QuotientForm(
            doc["vars"],
            [_affine_from(a) for a in doc["num"]],
            [_affine_from(a) for a in doc["den"]],
        )
    except (KeyError, TypeError) as exc:
        raise ExpressionError("quotient document needs 'vars', 'num' and 'den'") from exc
