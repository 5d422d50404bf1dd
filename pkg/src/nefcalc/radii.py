"""Slope, inradius and outradius of a polytope pair by exact linear programming.

The slope ``s(P, Q)`` is the largest ``t`` such that a translate of ``tQ``
fits inside ``P``.  Containment only has to be tested against the facet
normals of ``P``: ``tQ + x <= P`` iff ``t h_Q(u) + <x, u> <= h_P(u)`` for every
facet normal ``u`` of ``P``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput, InvalidInput, Unbounded
from .lp import maximize
from .polytope import Polytope, support
from .rational import format_rational


@dataclass(frozen=True)
class RadiiResult:
    """Optimal dilation with an exact primal witness and dual certificate.

    For an inradius, ``t_star * Q + translation`` lies in ``P``.  For an
    outradius, ``P`` lies in ``t_star * Q + translation``.  ``active_facets``
    and ``dual_certificate`` index the facets of the containing polytope.
    """

    t_star: Fraction
    translation: tuple[Fraction, ...]
    active_facets: tuple[int, ...]
    dual_certificate: tuple[Fraction, ...]
    kind: str = "inradius"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "t": format_rational(self.t_star),
            "x": [format_rational(c) for c in self.translation],
            "active_facets": list(self.active_facets),
            "dual": [format_rational(y) for y in self.dual_certificate],
        }


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _check_pair(P: Polytope, Q: Polytope) -> None:
    if P.dim != Q.dim:
        raise InvalidInput(f"dimension mismatch: {P.dim} vs {Q.dim}")
    for name, R in (("P", P), ("Q", Q)):
        if not R.is_full_dimensional:
            raise DegenerateInput(f"{name} has affine dimension {R.affine_dim} < {R.dim}")


def inradius(P: Polytope, Q: Polytope) -> RadiiResult:
    """``max {t : tQ + x in P for some x}`` with the lexicographically smallest ``x``."""
    _check_pair(P, Q)
    d = P.dim
    normals = [f.normal for f in P.facets]
    hP = [f.offset for f in P.facets]
    hQ = [support(Q, u) for u in normals]
    center = P.centroid()

    # variables (t, x - center); center is interior so b > 0
    A = [[hq] + list(u) for hq, u in zip(hQ, normals)]
    b = [hp - _dot(u, center) for hp, u in zip(hP, normals)]
    sol = maximize([1] + [0] * d, A, b, free=[False] + [True] * d)
    t_star = sol.value
    x = [sol.x[1 + k] + center[k] for k in range(d)]

    # lexicographic minimisation of the translation over the optimal face
    caps = [hp - t_star * hq for hp, hq in zip(hP, hQ)]
    for k in range(d):
        rows = [list(u[k:]) for u in normals]
        slack = [cap - _dot(u, x) for cap, u in zip(caps, normals)]
        obj = [-1] + [0] * (d - k - 1)
        step = maximize(obj, rows, slack, free=[True] * (d - k))
        x = x[:k] + [x[k + j] + step.x[j] for j in range(d - k)]

    active = tuple(j for j, (cap, u) in enumerate(zip(caps, normals)) if _dot(u, x) == cap)
    return RadiiResult(t_star, tuple(x), active, sol.dual, "inradius")


def slope(P: Polytope, Q: Polytope) -> Fraction:
    """Slope of ``Q`` with respect to ``P``: the inradius ``r(P; Q)``."""
    return inradius(P, Q).t_star


def outradius(P: Polytope, Q: Polytope) -> RadiiResult:
    """``R(P; Q) = 1 / s(Q, P)``: the smallest ``t`` with ``P`` inside a translate of ``tQ``."""
    inner = inradius(Q, P)
    if inner.t_star == 0:
        raise Unbounded("reverse inradius is zero")
    R = 1 / inner.t_star
    # (1/R) P + x in Q  <=>  P in R Q - R x
    shift = tuple(-R * c for c in inner.translation)
    return RadiiResult(R, shift, inner.active_facets, inner.dual_certificate, "outradius")


def verify_inradius(P: Polytope, Q: Polytope, res: RadiiResult) -> bool:
    """Check feasibility of the witness and exactness of the dual bound."""
    t, x = res.t_star, res.translation
    for v in Q.vertices:
        if not P.contains(tuple(t * a + b for a, b in zip(v, x))):
            return False
    y = res.dual_certificate
    if len(y) != len(P.facets) or any(v < 0 for v in y):
        return False
    d = P.dim
    combo = [sum(yj * f.normal[k] for yj, f in zip(y, P.facets)) for k in range(d)]
    if any(c != 0 for c in combo):
        return False
    # sum y_j (t h_Q(u_j) + <x,u_j>) <= sum y_j h_P(u_j) gives t * 1 <= t_star
    weight_q = sum(yj * support(Q, f.normal) for yj, f in zip(y, P.facets))
    weight_p = sum(yj * f.offset for yj, f in zip(y, P.facets))
    return weight_q == 1 and weight_p == t


def verify_outradius(P: Polytope, Q: Polytope, res: RadiiResult) -> bool:
    R, y = res.t_star, res.translation
    for v in P.vertices:
        # v in R Q + y  <=>  (v - y) / R in Q
        if not Q.contains(tuple((a - b) / R for a, b in zip(v, y))):
            return False
    inner = RadiiResult(1 / R, tuple(-c / R for c in y), res.active_facets, res.dual_certificate)
    return verify_inradius(Q, P, inner)
