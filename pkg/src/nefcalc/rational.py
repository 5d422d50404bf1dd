"""Exact scalar helpers: parsing and formatting of ``"p/q"`` strings.

All scalars are :class:`fractions.Fraction`; this module only handles the
boundary between text and exact values.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .errors import InvalidInput

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value) -> Fraction:
    """Parse an exact rational from an int or a ``"p/q"`` / integer string.

    Floats (Python floats or strings such as ``"0.5"`` or ``"1e3"``) are
    rejected: a float has already lost the information we need.
    """
    if isinstance(value, bool):
        raise InvalidInput(f"boolean is not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise InvalidInput(f"not an exact rational (use 'p/q'): {value!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise InvalidInput(f"zero denominator: {value!r}")
        return Fraction(num, den)
    raise InvalidInput(f"not an exact rational (use 'p/q'): {value!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def common_denominator(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out


def primitive(vec: Iterable[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    vec = tuple(vec)
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g == 0:
        return vec
    return tuple(v // g for v in vec)
