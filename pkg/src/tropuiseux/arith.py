"""Exact rational scalars.

Values are :class:`fractions.Fraction`, which is always held in lowest terms
with a positive denominator. This module only adds strict parsing and the
string format used for every rational in CLI and JSON I/O.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

__all__ = [
    "Rational",
    "RationalParseError",
    "rat_parse",
    "rat_format",
    "parse_vector",
    "format_vector",
    "common_denominator",
]

Rational = Fraction

_INT = r"[+-]?\d+"
_RAT_RE = re.compile(rf"^(?P<num>{_INT})(?:/(?P<den>\d+)|\.(?P<frac>\d+))?$")


class RationalParseError(ValueError):
    """Raised for text that is not an integer, fraction or finite decimal."""

    def __init__(self, token: str, reason: str = "malformed rational"):
        self.token = token
        super().__init__(f"{reason}: {token!r}")


def rat_parse(text: str) -> Fraction:
    """Parse ``"-3"``, ``"7/2"`` or ``"0.25"`` into an exact Fraction.

    A leading Unicode minus sign (U+2212) is accepted as ``-``.
    """
    token = text.strip().replace("−", "-")
    m = _RAT_RE.match(token)
    if m is None:
        raise RationalParseError(text)
    if m.group("den") is not None:
        den = int(m.group("den"))
        if den == 0:
            raise RationalParseError(text, "zero denominator")
        return Fraction(int(m.group("num")), den)
    if m.group("frac") is not None:
        # Fraction handles the decimal expansion exactly
        return Fraction(token)
    return Fraction(int(m.group("num")))


def rat_format(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_vector(text: str) -> list[Fraction]:
    """Parse a comma-separated list such as ``"0,0,2,1"``."""
    if not text.strip():
        raise RationalParseError(text, "empty coefficient list")
    out = []
    for pos, tok in enumerate(text.split(",")):
        try:
            out.append(rat_parse(tok))
        except RationalParseError as exc:
            raise RationalParseError(tok, f"entry {pos}: {exc.args[0].split(':')[0]}") from None
    return out


def format_vector(values: Iterable[Fraction]) -> list[str]:
    return [rat_format(v) for v in values]


def common_denominator(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Scale ``values`` to integers: returns ``(ints, d)`` with ``values[i] == ints[i] / d``."""
    d = 1
    for v in values:
        d = lcm(d, v.denominator)
    return [v.numerator * (d // v.denominator) for v in values], d
