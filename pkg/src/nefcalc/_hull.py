"""Exact convex hull kernel on integer points.

Callers scale rational input by a common denominator first, so every
predicate here is a plain integer dot product or determinant.  The hull is
built incrementally (beneath-beyond): each new point removes the facets it
sees and cones the horizon ridges to itself.  Facets are kept simplicial;
coplanar simplices are merged later by the caller.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntPoint = tuple[int, ...]


def det(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def hyperplane_normal(points: Sequence[IntPoint]) -> tuple[int, ...]:
    """Normal of the hyperplane through ``d`` points in ``Z^d`` (cofactor vector).

    Returns the zero vector when the points are affinely dependent.
    """
    base = points[0]
    diffs = [[p[k] - base[k] for k in range(len(base))] for p in points[1:]]
    d = len(base)
    normal = []
    for col in range(d):
        minor = [[row[k] for k in range(d) if k != col] for row in diffs]
        value = det(minor)
        normal.append(value if col % 2 == 0 else -value)
    return tuple(normal)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def affine_basis(points: Sequence[Sequence]) -> tuple[list[int], list[int]]:
    """Indices of a maximal affinely independent subset, and pivot coordinates.

    The pivot coordinates are columns on which the projection of the affine
    hull is injective; they let lower-dimensional sets be hulled in ``R^k``.
    """
    if not points:
        return [], []
    origin = points[0]
    chosen = [0]
    reduced: list[tuple[list[Fraction], int]] = []  # echelon rows with pivot col
    for idx in range(1, len(points)):
        row = [Fraction(a - b) for a, b in zip(points[idx], origin)]
        for prow, pcol in reduced:
            if row[pcol] != 0:
                f = row[pcol] / prow[pcol]
                row = [a - f * b for a, b in zip(row, prow)]
        pcol = next((k for k, v in enumerate(row) if v != 0), None)
        if pcol is not None:
            reduced.append((row, pcol))
            chosen.append(idx)
    return chosen, sorted(pcol for _, pcol in reduced)


class SimplicialHull:
    """Boundary triangulation of a full-dimensional integer point set.

    ``facets`` maps an id to ``(vertex_indices, normal, offset)`` with the
    outward normal satisfying ``normal . x <= offset`` on the hull.
    """

    def __init__(self, points: Sequence[IntPoint]):
        self.points = list(points)
        self.dim = len(self.points[0])
        d = self.dim
        start, _ = affine_basis(self.points)
        if len(start) != d + 1:
            raise ValueError("point set is not full-dimensional")
        # centroid of the starting simplex, scaled by d+1 to stay integral
        self._center = tuple(sum(self.points[i][k] for i in start) for k in range(d))
        self._scale = d + 1
        self.facets: dict[int, tuple[tuple[int, ...], tuple[int, ...], int]] = {}
        self._ridges: dict[frozenset, set[int]] = {}
        self._next_id = 0
        for drop in range(d + 1):
            self._add_facet(tuple(i for k, i in enumerate(start) if k != drop))
        used = set(start)
        for idx in range(len(self.points)):
            if idx not in used:
                self._insert(idx)

    def _add_facet(self, verts: tuple[int, ...]) -> None:
        pts = [self.points[i] for i in verts]
        normal = hyperplane_normal(pts)
        offset = dot(normal, pts[0])
        if dot(normal, self._center) > self._scale * offset:
            normal = tuple(-c for c in normal)
            offset = -offset
        fid = self._next_id
        self._next_id += 1
        self.facets[fid] = (verts, normal, offset)
        for k in range(len(verts)):
            ridge = frozenset(verts[:k] + verts[k + 1:])
            self._ridges.setdefault(ridge, set()).add(fid)

    def _remove_facet(self, fid: int) -> None:
        verts, _, _ = self.facets.pop(fid)
        for k in range(len(verts)):
            ridge = frozenset(verts[:k] + verts[k + 1:])
            owners = self._ridges[ridge]
            owners.discard(fid)
            if not owners:
                del self._ridges[ridge]

    def _insert(self, idx: int) -> None:
        p = self.points[idx]
        visible = {fid for fid, (_, n, off) in self.facets.items() if dot(n, p) > off}
        if not visible:
            return
        horizon = []
        for fid in visible:
            verts = self.facets[fid][0]
            for k in range(len(verts)):
                ridge_t = verts[:k] + verts[k + 1:]
                owners = self._ridges[frozenset(ridge_t)]
                if any(o not in visible for o in owners):
                    horizon.append(ridge_t)
        for fid in visible:
            self._remove_facet(fid)
        for ridge_t in horizon:
            self._add_facet(ridge_t + (idx,))

    def boundary_indices(self) -> set[int]:
        return {i for verts, _, _ in self.facets.values() for i in verts}
