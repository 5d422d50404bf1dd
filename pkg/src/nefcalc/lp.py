"""Dense exact simplex over ``Fraction`` with Bland's anti-cycling rule.

Only the shape the radii oracle needs is supported: maximise ``c.z`` subject
to ``A z <= b`` with ``b >= 0`` (so the slack basis is feasible), variables
either nonnegative or free.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput, Unbounded


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    # y >= 0 with y.A == c on free columns, y.A >= c on nonnegative ones, y.b == value
    dual: tuple[Fraction, ...]


def maximize(
    c: Sequence,
    A: Sequence[Sequence],
    b: Sequence,
    free: Sequence[bool] | None = None,
) -> LPSolution:
    m, n = len(A), len(c)
    free = list(free) if free is not None else [False] * n
    if any(len(row) != n for row in A) or len(b) != m or len(free) != n:
        raise InvalidInput("inconsistent LP dimensions")
    b = [Fraction(v) for v in b]
    if any(v < 0 for v in b):
        raise InvalidInput("right-hand side must be nonnegative for the slack basis")

    cols: list[tuple[int, int]] = []
    for j in range(n):
        cols.append((j, 1))
        if free[j]:
            cols.append((j, -1))
    ncols = len(cols)
    width = ncols + m

    rows = []
    for i in range(m):
        row = [Fraction(sign * A[i][j]) for j, sign in cols]
        row += [Fraction(1 if k == i else 0) for k in range(m)]
        row.append(b[i])
        rows.append(row)
    obj = [Fraction(sign * c[j]) for j, sign in cols] + [Fraction(0)] * m
    basis = [ncols + i for i in range(m)]

    while True:
        enter = next((k for k in range(width) if obj[k] > 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise Unbounded("objective is unbounded above")
        _pivot(rows, obj, leave, enter)
        basis[leave] = enter

    values = [Fraction(0)] * width
    for i, k in enumerate(basis):
        values[k] = rows[i][-1]
    x = [Fraction(0)] * n
    for k, (j, sign) in enumerate(cols):
        x[j] += sign * values[k]
    dual = tuple(-obj[ncols + i] for i in range(m))
    value = sum(Fraction(c[j]) * x[j] for j in range(n))
    return LPSolution(value, tuple(x), dual)


def _pivot(rows, obj, r: int, k: int) -> None:
    prow = rows[r]
    piv = prow[k]
    if piv != 1:
        prow[:] = [v / piv for v in prow]
    for i, row in enumerate(rows):
        if i != r and row[k] != 0:
            f = row[k]
            row[:] = [a - f * p for a, p in zip(row, prow)]
    if obj[k] != 0:
        f = obj[k]
        obj[:] = [a - f * p for a, p in zip(obj, prow[:-1])]
