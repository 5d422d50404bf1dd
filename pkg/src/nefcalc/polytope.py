"""Exact rational convex polytopes.

A full-dimensional polytope stands in for a nef and big class, a flat one
for a nef class that is not big.  Every coordinate is a ``Fraction``; hull
computations run on integer points obtained by clearing denominators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, NamedTuple, Sequence

from . import _hull
from .errors import DegenerateInput, InvalidInput
from .rational import common_denominator, parse_rational, primitive

Point = tuple[Fraction, ...]


class Facet(NamedTuple):
    """Inequality ``<x, normal> <= offset`` with a primitive integer normal."""

    normal: tuple[int, ...]
    offset: Fraction


@dataclass(frozen=True)
class Polytope:
    """Bounded convex polytope in ``Q^dim`` with matching V- and H-representations.

    ``vertices`` is the minimal vertex list in lexicographic order.  ``facets``
    is the irredundant facet list, sorted by normal; it is empty when the
    polytope is not full-dimensional (``affine_dim < dim``).
    """

    dim: int
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]
    affine_dim: int
    # boundary triangulation over ``vertices`` indices; only used for volume
    simplices: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @property
    def is_degenerate(self) -> bool:
        return self.affine_dim < self.dim

    def contains(self, point: Sequence) -> bool:
        """Exact membership test through the H-representation."""
        if not self.is_full_dimensional:
            raise DegenerateInput("membership test needs a full-dimensional polytope")
        pt = tuple(Fraction(c) for c in point)
        return all(_dot(f.normal, pt) <= f.offset for f in self.facets)

    def contains_polytope(self, other: "Polytope") -> bool:
        return all(self.contains(v) for v in other.vertices)

    def centroid(self) -> Point:
        """Average of the vertices; interior when full-dimensional."""
        n = len(self.vertices)
        return tuple(sum(v[k] for v in self.vertices) / n for k in range(self.dim))

    def translate(self, shift: Sequence) -> "Polytope":
        shift = tuple(Fraction(c) for c in shift)
        if len(shift) != self.dim:
            raise InvalidInput("translation vector has the wrong dimension")
        verts = tuple(tuple(a + b for a, b in zip(v, shift)) for v in self.vertices)
        facets = tuple(Facet(f.normal, f.offset + _dot(f.normal, shift)) for f in self.facets)
        return Polytope(self.dim, verts, facets, self.affine_dim, self.simplices)

    def __repr__(self) -> str:
        verts = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, vertices=[{verts}])"


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _as_point(p, dim: int | None) -> Point:
    pt = tuple(parse_rational(c) for c in p)
    if dim is not None and len(pt) != dim:
        raise InvalidInput(f"point {p!r} does not have dimension {dim}")
    return pt


def hull(points: Iterable[Sequence], dim: int | None = None) -> Polytope:
    """Convex hull of a finite rational point set.

    Redundant points are dropped; flat input yields a degenerate polytope
    with ``affine_dim`` recorded instead of an error.
    """
    pts = sorted({_as_point(p, dim) for p in points})
    if not pts:
        raise InvalidInput("hull of an empty point set")
    if dim is None:
        dim = len(pts[0])
    if dim < 1 or any(len(p) != dim for p in pts):
        raise InvalidInput("points have inconsistent dimensions")
    scale = common_denominator(c for p in pts for c in p)
    ipts = [tuple(int(c * scale) for c in p) for p in pts]

    chosen, pivots = _hull.affine_basis(ipts)
    k = len(chosen) - 1
    if k == dim:
        return _full_hull(pts, ipts, dim, scale)
    if k == 0:
        return Polytope(dim, (pts[0],), (), 0)
    proj = [tuple(p[c] for c in pivots) for p in ipts]
    if k == 1:
        lo = min(range(len(proj)), key=lambda i: proj[i])
        hi = max(range(len(proj)), key=lambda i: proj[i])
        return Polytope(dim, tuple(sorted((pts[lo], pts[hi]))), (), 1)
    # flat set: hull inside the affine span via an injective coordinate projection
    tri = _hull.SimplicialHull(proj)
    keep = _extreme_indices(tri, proj)
    return Polytope(dim, tuple(pts[i] for i in sorted(keep)), (), k)


def _extreme_indices(tri: _hull.SimplicialHull, ipts) -> list[int]:
    """Boundary points whose active facet normals span the space (true vertices)."""
    planes: dict[tuple[int, ...], int] = {}
    for verts, normal, _ in tri.facets.values():
        pn = primitive(normal)
        if pn not in planes:
            planes[pn] = _dot(pn, ipts[verts[0]])
    origin = (0,) * len(ipts[0])
    out = []
    for i in tri.boundary_indices():
        normals = [n for n, off in planes.items() if _dot(n, ipts[i]) == off]
        if len(_hull.affine_basis([origin] + normals)[0]) - 1 == len(origin):
            out.append(i)
    return out


def _full_hull(pts, ipts, dim: int, scale: int) -> Polytope:
    tri = _hull.SimplicialHull(ipts)
    keep = sorted(_extreme_indices(tri, ipts))
    if len(keep) != len(tri.boundary_indices()):
        # retriangulate over true vertices only
        ipts = [ipts[i] for i in keep]
        pts = [pts[i] for i in keep]
        tri = _hull.SimplicialHull(ipts)
        keep = list(range(len(pts)))
    index = {old: new for new, old in enumerate(keep)}
    facets = {}
    for verts, normal, off in tri.facets.values():
        pn = primitive(normal)
        if pn not in facets:
            facets[pn] = Fraction(_dot(pn, ipts[verts[0]]), scale)
    simplices = tuple(tuple(index[i] for i in verts) for verts, _, _ in tri.facets.values())
    return Polytope(
        dim,
        tuple(pts[i] for i in keep),
        tuple(Facet(n, off) for n, off in sorted(facets.items())),
        dim,
        simplices,
    )


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    """``{p + q}`` computed as the hull of all vertex-pair sums."""
    if P.dim != Q.dim:
        raise InvalidInput(f"dimension mismatch: {P.dim} vs {Q.dim}")
    return hull((tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices), P.dim)


def linear_combination(P: Polytope, a, Q: Polytope, b) -> Polytope:
    """``aP + bQ`` for rationals ``a, b >= 0``, with a single hull call."""
    if P.dim != Q.dim:
        raise InvalidInput(f"dimension mismatch: {P.dim} vs {Q.dim}")
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0:
        raise InvalidInput("Minkowski combinations need nonnegative weights")
    return hull(
        (tuple(a * x + b * y for x, y in zip(p, q)) for p in P.vertices for q in Q.vertices),
        P.dim,
    )


def scale(P: Polytope, t) -> Polytope:
    """Dilate by ``t >= 0``; ``t = 0`` collapses to the origin."""
    t = parse_rational(t)
    if t < 0:
        raise InvalidInput(f"negative dilation factor {t}")
    if t == 0:
        return Polytope(P.dim, ((Fraction(0),) * P.dim,), (), 0)
    verts = tuple(tuple(t * c for c in v) for v in P.vertices)
    facets = tuple(Facet(f.normal, t * f.offset) for f in P.facets)
    return Polytope(P.dim, verts, facets, P.affine_dim, P.simplices)


def support(P: Polytope, u: Sequence) -> Fraction:
    """Support function ``max_v <v, u>`` over the vertices."""
    u = tuple(parse_rational(c) for c in u)
    if len(u) != P.dim:
        raise InvalidInput("direction has the wrong dimension")
    return max(_dot(v, u) for v in P.vertices)


def normal_directions(P: Polytope) -> set[tuple[int, ...]]:
    """Outward primitive facet normals."""
    if not P.is_full_dimensional:
        raise DegenerateInput(f"polytope has affine dimension {P.affine_dim} < {P.dim}")
    return {f.normal for f in P.facets}


def same_set(P: Polytope, Q: Polytope) -> bool:
    """Set equality; vertex lists are minimal and sorted, so this is exact."""
    return P.dim == Q.dim and P.vertices == Q.vertices


def simplex_volume_sum(P: Polytope) -> Fraction:
    """Volume from the stored boundary triangulation coned to the vertex centroid."""
    if not P.is_full_dimensional:
        return Fraction(0)
    d = P.dim
    n = len(P.vertices)
    scale_ = common_denominator(c for v in P.vertices for c in v)
    # integer coordinates of n * scale * (v - centroid)
    total = [sum(int(v[k] * scale_) for v in P.vertices) for k in range(d)]
    rel = [tuple(n * int(v[k] * scale_) - total[k] for k in range(d)) for v in P.vertices]
    acc = 0
    for simplex in P.simplices:
        acc += abs(_hull.det([rel[i] for i in simplex]))
    return Fraction(acc, factorial(d) * (n * scale_) ** d)


def unit_cube(d: int) -> Polytope:
    from itertools import product

    return hull(product((0, 1), repeat=d), d)


def standard_simplex(d: int) -> Polytope:
    pts = [(0,) * d] + [tuple(1 if k == i else 0 for k in range(d)) for i in range(d)]
    return hull(pts, d)
