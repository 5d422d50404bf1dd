"""Diskant, inradius/outradius and Bonnesen bounds, and the proportionality test.

Conventions: ``s_i = (alpha^i . beta^(d-i))``, so ``s_d`` is the top power
of ``alpha`` and ``s_0`` that of ``beta``.  The inradius ``r(alpha; beta)``
is the slope ``s(alpha, beta)``; the outradius is ``1 / s(beta, alpha)``.
All radical expressions are :class:`CertifiedReal` trees and every verdict
comes from :func:`compare_certified`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .certified import (
    DEFAULT_MAX_BITS,
    CertifiedReal,
    Enclosure,
    Verdict,
    as_certified,
    compare_certified,
)
from .errors import InvalidInput, NotBig, PrecisionExhausted, UnrealizableSequence
from .mixedvol import NefSequence
from .polytope import Polytope, same_set, scale
from .rational import format_rational

_HOLDS = (Verdict.LT, Verdict.EQ)  # verdicts meaning "lhs <= rhs"


def _require_big(seq: NefSequence) -> None:
    if not seq.beta_big:
        raise NotBig("s_0 = 0: beta is not big")
    if not seq.alpha_big:
        raise NotBig("s_d = 0: alpha is not big")


def _require_degree(seq: NefSequence) -> int:
    if seq.degree < 2:
        raise InvalidInput("the radius bounds need d >= 2")
    return seq.degree


def _c(x) -> CertifiedReal:
    return as_certified(x)


# -- Diskant ---------------------------------------------------------------


@dataclass(frozen=True)
class DiskantResult:
    lhs: CertifiedReal
    rhs: CertifiedReal
    comparison: Verdict  # lhs against rhs
    deficit: Enclosure

    @property
    def holds(self) -> bool:
        return self.comparison in (Verdict.GT, Verdict.EQ)

    @property
    def exact_tie(self) -> bool:
        return self.comparison is Verdict.EQ

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "comparison": self.comparison.value,
            "exact_tie": self.exact_tie,
            "deficit": _enclosure_dict(self.deficit),
        }


def diskant_sides(seq: NefSequence, slope) -> tuple[CertifiedReal, CertifiedReal]:
    """Both sides of Diskant's inequality for slope ``slope``.

    lhs = s_{d-1}^(d/(d-1)) - s_d s_0^(1/(d-1)),
    rhs = (s_{d-1}^(1/(d-1)) - slope * s_0^(1/(d-1)))^d.
    """
    d = _require_degree(seq)
    s = seq.s
    e = Fraction(1, d - 1)
    lhs = _c(s[d - 1]) ** (d * e) - _c(s[d]) * _c(s[0]) ** e
    rhs = (_c(s[d - 1]) ** e - _c(slope) * _c(s[0]) ** e) ** d
    return lhs, rhs


def diskant_check(
    seq: NefSequence,
    slope,
    max_bits: int = DEFAULT_MAX_BITS,
    width_bits: int = 64,
) -> DiskantResult:
    """Certified check of Diskant's inequality at a given slope.

    The slope must lie in ``[0, s_d / s_{d-1}]``, the range every genuine
    slope satisfies; the LP inradius is the intended input.
    """
    _require_big(seq)
    d = _require_degree(seq)
    slope_c = _c(slope)
    upper = Fraction(seq.s[d], seq.s[d - 1])
    if compare_certified(slope_c, 0, max_bits) is Verdict.LT:
        raise InvalidInput("slope must be nonnegative")
    if compare_certified(slope_c, upper, max_bits) is Verdict.GT:
        raise InvalidInput(f"slope exceeds the upper bound s_d/s_(d-1) = {upper}")
    lhs, rhs = diskant_sides(seq, slope_c)
    verdict = compare_certified(lhs, rhs, max_bits=max_bits)
    deficit = (lhs - rhs).refine(width_bits, max_bits)
    return DiskantResult(lhs, rhs, verdict, deficit)


# -- radius bounds ----------------------------------------------------------


def _inradius_lower(seq: NefSequence, max_bits: int) -> CertifiedReal:
    d = _require_degree(seq)
    s = seq.s
    e = Fraction(1, d - 1)
    radicand = _c(s[d - 1]) ** (d * e) - _c(s[0]) ** e * _c(s[d])
    sign = radicand.sign(max_bits)
    if sign is None:
        raise PrecisionExhausted("could not decide the sign of the Diskant radicand")
    if sign < 0:
        raise UnrealizableSequence(
            f"s_(d-1)^d < s_0 s_d^(d-1) for s = {[str(x) for x in s]}: "
            "the sequence violates Khovanskii-Teissier"
        )
    return (_c(s[d - 1]) ** e - radicand ** Fraction(1, d)) / _c(s[0]) ** e


def inradius_bounds(seq: NefSequence, max_bits: int = DEFAULT_MAX_BITS) -> tuple[CertifiedReal, CertifiedReal]:
    """Lower and upper bounds on ``r(alpha; beta)`` from the sequence alone."""
    _require_big(seq)
    d = _require_degree(seq)
    lower = _inradius_lower(seq, max_bits)
    upper = _c(Fraction(seq.s[d], seq.s[d - 1]))
    return lower, upper


def outradius_bounds(seq: NefSequence, max_bits: int = DEFAULT_MAX_BITS) -> tuple[CertifiedReal, CertifiedReal]:
    """Bounds on ``R(alpha; beta)``: ``s_1/s_0`` below, the swapped inradius bound inverted above.

    The upper bound is ``1 / lower(reversed sequence)``, i.e.
    ``s_d^(1/(d-1)) / (s_1^(1/(d-1)) - (s_1^(d/(d-1)) - s_d^(1/(d-1)) s_0)^(1/d))``.
    """
    _require_big(seq)
    _require_degree(seq)
    lower = _c(Fraction(seq.s[1], seq.s[0]))
    upper = 1 / _inradius_lower(seq.reversed(), max_bits)
    return lower, upper


# -- Bonnesen ----------------------------------------------------------------


@dataclass(frozen=True)
class BonnesenResult:
    lhs: CertifiedReal
    rhs: CertifiedReal
    comparison: Verdict

    @property
    def holds(self) -> bool:
        return self.comparison in _HOLDS

    @property
    def equality(self) -> bool:
        return self.comparison is Verdict.EQ

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "comparison": self.comparison.value,
            "equality": self.equality,
            "lhs": _enclosure_dict(self.lhs.refine()),
            "rhs": _enclosure_dict(self.rhs.refine()),
        }


def bonnesen_check(seq: NefSequence, r, R, max_bits: int = DEFAULT_MAX_BITS) -> BonnesenResult:
    """``(s_0^2 / 4) (R - r)^2 <= s_1^2 - s_0 s_2`` for surfaces."""
    if seq.degree != 2:
        raise InvalidInput("Bonnesen's inequality is stated for d = 2")
    _require_big(seq)
    s0, s1, s2 = seq.s
    lhs = _c(Fraction(s0 ** 2, 4)) * (_c(R) - _c(r)) ** 2
    rhs = _c(s1 ** 2 - s0 * s2)
    return BonnesenResult(lhs, rhs, compare_certified(lhs, rhs, max_bits=max_bits))


# -- proportionality -----------------------------------------------------------


@dataclass(frozen=True)
class ProportionalityResult:
    proportional: bool
    ratio: CertifiedReal | None  # alpha = ratio * beta when proportional
    geometric_witness: bool | None = None

    def to_dict(self) -> dict:
        out = {"proportional": self.proportional, "geometric_witness": self.geometric_witness}
        if self.ratio is not None:
            out["ratio"] = _enclosure_dict(self.ratio.refine())
        return out


def _normalized_vertices(P: Polytope):
    base = P.vertices[0]
    return tuple(tuple(a - b for a, b in zip(v, base)) for v in P.vertices)


def is_homothetic_witness(P: Polytope, Q: Polytope, ratio: Fraction) -> bool:
    """True iff ``P`` is a translate of ``ratio * Q``."""
    return P.dim == Q.dim and _normalized_vertices(P) == _normalized_vertices(scale(Q, ratio))


def proportionality_test(
    seq: NefSequence,
    P: Polytope | None = None,
    Q: Polytope | None = None,
) -> ProportionalityResult:
    """Decide proportionality from ``s_{d-1}^d == s_0 s_d^(d-1)``.

    When proportional the ratio ``(s_d / s_0)^(1/d)`` satisfies
    ``alpha = ratio * beta``; for polytope input the translate-of-dilate
    relation is also verified vertex by vertex.
    """
    _require_big(seq)
    s, d = seq.s, seq.degree
    proportional = s[d - 1] ** d == s[0] * s[d] ** (d - 1)
    if not proportional:
        witness = None
        if P is not None and Q is not None:
            witness = False
        return ProportionalityResult(False, None, witness)
    ratio = _c(Fraction(s[d], s[0])) ** Fraction(1, d)
    witness = None
    if P is not None and Q is not None:
        exact = ratio.exact.as_rational() if ratio.exact is not None else None
        witness = exact is not None and is_homothetic_witness(P, Q, exact)
    return ProportionalityResult(True, ratio, witness)


# -- sandwich and report ---------------------------------------------------------


@dataclass(frozen=True)
class ChainLink:
    name: str
    verdict: Verdict

    @property
    def holds(self) -> bool:
        return self.verdict in _HOLDS

    @property
    def undecided(self) -> bool:
        return self.verdict is Verdict.UNDECIDED


def radius_chain(
    seq: NefSequence,
    r=None,
    R=None,
    max_bits: int = DEFAULT_MAX_BITS,
) -> list[ChainLink]:
    """Certify ``lower_G <= r <= s_d/s_{d-1} <= s_1/s_0 <= R <= upper_H`` link by link.

    Without radii the chain skips ``r`` and ``R``.
    """
    lower_in, upper_in = inradius_bounds(seq, max_bits)
    lower_out, upper_out = outradius_bounds(seq, max_bits)
    names = ["inradius_lower", "s_d/s_(d-1)", "s_1/s_0", "outradius_upper"]
    values = [lower_in, upper_in, lower_out, upper_out]
    if r is not None:
        names.insert(1, "r")
        values.insert(1, _c(r))
    if R is not None:
        k = names.index("outradius_upper")
        names.insert(k, "R")
        values.insert(k, _c(R))
    return [
        ChainLink(f"{names[k]} <= {names[k + 1]}", compare_certified(values[k], values[k + 1], max_bits))
        for k in range(len(values) - 1)
    ]


@dataclass(frozen=True)
class BoundsReport:
    degree: int
    s: NefSequence
    inradius_lower: Enclosure
    inradius_upper: Enclosure
    outradius_lower: Enclosure
    outradius_upper: Enclosure
    chain: tuple[ChainLink, ...]
    diskant: DiskantResult | None = None
    bonnesen: BonnesenResult | None = None
    precision_bits_used: int = 0
    inradius_exact_tie: bool = False
    notes: tuple[str, ...] = field(default=())

    @property
    def verdicts(self) -> dict[str, Verdict]:
        out = {link.name: link.verdict for link in self.chain}
        if self.diskant is not None:
            out["diskant"] = self.diskant.comparison
        if self.bonnesen is not None:
            out["bonnesen"] = self.bonnesen.comparison
        return out

    @property
    def passed(self) -> bool:
        ok = all(link.holds for link in self.chain)
        if self.diskant is not None:
            ok = ok and self.diskant.holds
        if self.bonnesen is not None:
            ok = ok and self.bonnesen.holds
        return ok

    @property
    def undecided(self) -> list[str]:
        return [name for name, v in self.verdicts.items() if v is Verdict.UNDECIDED]

    def to_dict(self) -> dict:
        out = {
            "d": self.degree,
            "sequence": self.s.to_dict(),
            "inradius_lower": _enclosure_dict(self.inradius_lower),
            "inradius_upper": _enclosure_dict(self.inradius_upper),
            "inradius_exact_tie": self.inradius_exact_tie,
            "outradius_lower": _enclosure_dict(self.outradius_lower),
            "outradius_upper": _enclosure_dict(self.outradius_upper),
            "chain": [{"link": c.name, "verdict": c.verdict.value, "holds": c.holds} for c in self.chain],
            "precision_bits_used": self.precision_bits_used,
            "passed": self.passed,
        }
        if self.diskant is not None:
            out["diskant"] = self.diskant.to_dict()
        if self.bonnesen is not None:
            out["bonnesen"] = self.bonnesen.to_dict()
        return out


def bounds_report(
    seq: NefSequence,
    r=None,
    R=None,
    slope=None,
    width_bits: int = 64,
    max_bits: int = DEFAULT_MAX_BITS,
) -> BoundsReport:
    """Compute every bound for ``seq`` and certify the inequalities that apply.

    ``slope`` defaults to ``r`` for the Diskant check; Bonnesen needs both
    radii and ``d = 2``.
    """
    lower_in, upper_in = inradius_bounds(seq, max_bits)
    lower_out, upper_out = outradius_bounds(seq, max_bits)
    encl = [x.refine(width_bits, max_bits) for x in (lower_in, upper_in, lower_out, upper_out)]
    chain = radius_chain(seq, r, R, max_bits)
    if slope is None:
        slope = r
    diskant = diskant_check(seq, slope, max_bits, width_bits) if slope is not None else None
    bonnesen = None
    if seq.degree == 2 and r is not None and R is not None:
        bonnesen = bonnesen_check(seq, r, R, max_bits)
    tie = compare_certified(lower_in, upper_in, max_bits) is Verdict.EQ
    used = max([e.bits for e in encl] + ([diskant.deficit.bits] if diskant else []))
    return BoundsReport(
        seq.degree, seq, *encl, tuple(chain), diskant, bonnesen, used, tie
    )


def _enclosure_dict(e: Enclosure) -> dict:
    return {
        "lo": format_rational(e.lo),
        "hi": format_rational(e.hi),
        "exact": e.exact,
        "approx": float(e.midpoint()),
    }
