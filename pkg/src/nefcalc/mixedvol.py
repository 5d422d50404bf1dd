"""Volumes, mixed volumes and the intersection sequence of a polytope pair.

Normalisation: ``s_i = d! * V(P[i], Q[d-i])`` where ``V`` is the mixed
volume with ``V(P, ..., P) = vol(P)``.  Two independent routes produce the
same numbers: inclusion-exclusion polarisation over Minkowski sums, and
interpolation of the polynomial ``t -> vol(P + tQ)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Sequence

from .errors import InvalidInput
from .polytope import Polytope, linear_combination, scale, simplex_volume_sum
from .rational import format_rational, parse_rational

POLARIZATION = "polarization"
INTERPOLATION = "interpolation"


@dataclass(frozen=True)
class NefSequence:
    """The numbers ``s_0, ..., s_d`` with ``s_i = (alpha^i . beta^(d-i))``.

    ``realized`` is True only for sequences computed from a polytope pair;
    free sequences are accepted by the checkers but may violate the inequalities.
    """

    s: tuple[Fraction, ...]
    realized: bool = False
    provenance: str | None = field(default=None, compare=False)

    def __post_init__(self):
        vals = tuple(parse_rational(x) for x in self.s)
        if len(vals) < 2:
            raise InvalidInput("a sequence needs at least s_0 and s_1 (degree >= 1)")
        if any(v < 0 for v in vals):
            raise InvalidInput("intersection numbers of nef classes are nonnegative")
        object.__setattr__(self, "s", vals)

    @property
    def degree(self) -> int:
        return len(self.s) - 1

    @property
    def alpha_big(self) -> bool:
        return self.s[-1] > 0

    @property
    def beta_big(self) -> bool:
        return self.s[0] > 0

    def reversed(self) -> "NefSequence":
        """Sequence of the swapped pair ``(beta, alpha)``."""
        return NefSequence(self.s[::-1], self.realized, self.provenance)

    def to_dict(self) -> dict:
        return {"d": self.degree, "s": [format_rational(x) for x in self.s], "realized": self.realized}

    @classmethod
    def from_dict(cls, data: dict) -> "NefSequence":
        if not isinstance(data, dict) or "s" not in data:
            raise InvalidInput("sequence JSON needs an 's' list")
        seq = cls(tuple(data["s"]), bool(data.get("realized", False)))
        if "d" in data and data["d"] != seq.degree:
            raise InvalidInput(f"declared d={data['d']} but {len(seq.s)} entries given")
        return seq


def volume(P: Polytope) -> Fraction:
    """Exact Euclidean volume; zero for flat polytopes."""
    return simplex_volume_sum(P)


def _check_same_dim(polys: Sequence[Polytope]) -> int:
    dims = {P.dim for P in polys}
    if len(dims) != 1:
        raise InvalidInput(f"mixed dimensions {sorted(dims)}")
    return dims.pop()


def _combination_volume(polys: Sequence[Polytope], weights: Sequence[int]) -> Fraction:
    terms = [(P, w) for P, w in zip(polys, weights) if w]
    if not terms:
        return Fraction(0)
    acc = scale(terms[0][0], terms[0][1])
    for P, w in terms[1:]:
        acc = linear_combination(acc, 1, P, w)
    return volume(acc)


def mixed_volume(polytopes: Sequence[Polytope]) -> Fraction:
    """``V(P_1, ..., P_d)`` by inclusion-exclusion over Minkowski sums.

    Repeated arguments are grouped, so a subset sum ``sum_{i in S} P_i``
    becomes a weighted combination and each distinct combination is hulled
    once.
    """
    polytopes = list(polytopes)
    if not polytopes:
        raise InvalidInput("mixed volume of an empty list")
    d = _check_same_dim(polytopes)
    if len(polytopes) != d:
        raise InvalidInput(f"need exactly {d} polytopes in dimension {d}, got {len(polytopes)}")
    distinct: list[Polytope] = []
    mult: list[int] = []
    for P in polytopes:
        for k, R in enumerate(distinct):
            if R == P:
                mult[k] += 1
                break
        else:
            distinct.append(P)
            mult.append(1)
    total = Fraction(0)
    for counts in product(*(range(m + 1) for m in mult)):
        size = sum(counts)
        if size == 0:
            continue
        weight = prod(comb(m, c) for m, c in zip(mult, counts))
        sign = -1 if (d - size) % 2 else 1
        total += sign * weight * _combination_volume(distinct, counts)
    return total / factorial(d)


def _pair_polarization(P: Polytope, Q: Polytope) -> tuple[Fraction, ...]:
    d = _check_same_dim([P, Q])
    cache: dict[tuple[int, int], Fraction] = {}

    def vol(a: int, b: int) -> Fraction:
        if (a, b) not in cache:
            cache[(a, b)] = _combination_volume([P, Q], [a, b])
        return cache[(a, b)]

    seq = []
    for i in range(d + 1):
        j = d - i
        acc = Fraction(0)
        for a in range(i + 1):
            for b in range(j + 1):
                if a + b == 0:
                    continue
                sign = -1 if (d - a - b) % 2 else 1
                acc += sign * comb(i, a) * comb(j, b) * vol(a, b)
        seq.append(acc)  # d! * V(P[i], Q[j])
    return tuple(seq)


def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Monomial coefficients of the interpolating polynomial (Newton form, exact)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            coef[k] = (coef[k] - coef[k - 1]) / (xs[k] - xs[k - level])
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[k] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[k]
    return poly


def volume_polynomial(P: Polytope, Q: Polytope) -> list[Fraction]:
    """Coefficients ``c_0..c_d`` of ``vol(P + tQ) = sum c_i t^i``.

    Evaluated exactly at ``t = 0, ..., d`` and interpolated.
    """
    d = _check_same_dim([P, Q])
    ts = list(range(d + 1))
    values = [_combination_volume([P, Q], [1, t]) for t in ts]
    return _interpolate(ts, values)


def intersection_sequence(P: Polytope, Q: Polytope, method: str | None = None) -> NefSequence:
    """``s_i = d! V(P[i], Q[d-i])`` for the pair (alpha = P, beta = Q).

    ``method`` picks the algorithm; by default polarisation for ``d <= 4``
    and interpolation beyond.
    """
    d = _check_same_dim([P, Q])
    if method is None:
        method = POLARIZATION if d <= 4 else INTERPOLATION
    if method == POLARIZATION:
        s = _pair_polarization(P, Q)
    elif method == INTERPOLATION:
        c = volume_polynomial(P, Q)
        # c_k = C(d, k) V(P[d-k], Q[k])
        s = tuple(factorial(d) * c[d - i] / comb(d, i) for i in range(d + 1))
    else:
        raise InvalidInput(f"unknown method {method!r}")
    return NefSequence(s, realized=True, provenance=method)
