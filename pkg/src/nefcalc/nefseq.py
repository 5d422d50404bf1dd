"""Khovanskii-Teissier checks on intersection sequences.

Everything that involves only integer powers is decided by exact rational
comparison; the Minkowski inequality has ``d``-th roots and goes through
the certified comparator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .certified import DEFAULT_MAX_BITS, CertifiedReal, Verdict, compare_certified
from .errors import InvalidInput, NotBig
from .mixedvol import NefSequence, intersection_sequence, volume
from .polytope import Polytope, minkowski_sum
from .rational import format_rational


@dataclass(frozen=True)
class IndexVerdict:
    index: int
    deficit: Fraction  # lhs - rhs; the inequality holds iff deficit >= 0

    @property
    def holds(self) -> bool:
        return self.deficit >= 0

    @property
    def equality(self) -> bool:
        return self.deficit == 0


@dataclass(frozen=True)
class InequalityReport:
    name: str
    verdicts: tuple[IndexVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(v.holds for v in self.verdicts)

    @property
    def all_equal(self) -> bool:
        return all(v.equality for v in self.verdicts)

    @property
    def failures(self) -> list[int]:
        return [v.index for v in self.verdicts if not v.holds]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "equality": self.all_equal,
            "indices": [
                {"i": v.index, "deficit": format_rational(v.deficit), "holds": v.holds}
                for v in self.verdicts
            ],
        }


def check_log_concavity(seq: NefSequence) -> InequalityReport:
    """``s_i^2 >= s_{i-1} s_{i+1}`` for ``1 <= i <= d-1``."""
    if seq.degree < 2:
        raise InvalidInput("log-concavity needs d >= 2")
    s = seq.s
    return InequalityReport(
        "log_concavity",
        tuple(IndexVerdict(i, s[i] ** 2 - s[i - 1] * s[i + 1]) for i in range(1, seq.degree)),
    )


def check_kt_power(seq: NefSequence) -> InequalityReport:
    """``s_i^d >= s_0^(d-i) s_d^i`` for ``0 <= i <= d``."""
    s, d = seq.s, seq.degree
    return InequalityReport(
        "kt_power",
        tuple(IndexVerdict(i, s[i] ** d - s[0] ** (d - i) * s[d] ** i) for i in range(d + 1)),
    )


@dataclass(frozen=True)
class MinkowskiReport:
    verdict: Verdict  # ordering of lhs against rhs
    lhs: CertifiedReal
    rhs: CertifiedReal
    identity_holds: bool  # d! vol(P+Q) == sum C(d,i) s_i

    @property
    def holds(self) -> bool:
        return self.verdict in (Verdict.GT, Verdict.EQ)

    @property
    def equality(self) -> bool:
        return self.verdict is Verdict.EQ

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "holds": self.holds,
            "equality": self.equality,
            "expansion_identity": self.identity_holds,
            "lhs_approx": float(self.lhs),
            "rhs_approx": float(self.rhs),
        }


def check_minkowski(
    P: Polytope,
    Q: Polytope,
    seq: NefSequence | None = None,
    max_bits: int = DEFAULT_MAX_BITS,
) -> MinkowskiReport:
    """``((P+Q)^d)^(1/d) >= (P^d)^(1/d) + (Q^d)^(1/d)`` in the intersection normalisation."""
    if P.dim != Q.dim:
        raise InvalidInput(f"dimension mismatch: {P.dim} vs {Q.dim}")
    d = P.dim
    if seq is None:
        seq = intersection_sequence(P, Q)
    top = factorial(d) * volume(minkowski_sum(P, Q))
    expansion = sum(comb(d, i) * si for i, si in enumerate(seq.s))
    root = Fraction(1, d)
    lhs = CertifiedReal.const(top) ** root
    rhs = CertifiedReal.const(seq.s[d]) ** root + CertifiedReal.const(seq.s[0]) ** root
    return MinkowskiReport(compare_certified(lhs, rhs, max_bits=max_bits), lhs, rhs, top == expansion)


@dataclass(frozen=True)
class EqualityConditions:
    cond1: bool  # s_i^2 == s_{i-1} s_{i+1}
    cond2: bool  # s_i^d == s_0^(d-i) s_d^i
    cond3: bool  # s_{d-1}^d == s_0 s_d^(d-1)
    cond4: bool | None  # Minkowski equality; None unless polytopes were supplied
    cond4_input_needed: bool

    @property
    def all_equivalent(self) -> bool:
        conds = [self.cond1, self.cond2, self.cond3]
        if self.cond4 is not None:
            conds.append(self.cond4)
        return len(set(conds)) == 1

    def to_dict(self) -> dict:
        return {
            "cond1": self.cond1,
            "cond2": self.cond2,
            "cond3": self.cond3,
            "cond4": self.cond4,
            "cond4_input_needed": self.cond4_input_needed,
            "all_equivalent": self.all_equivalent,
        }


def check_equality_conditions(
    seq: NefSequence,
    P: Polytope | None = None,
    Q: Polytope | None = None,
    max_bits: int = DEFAULT_MAX_BITS,
) -> EqualityConditions:
    """Evaluate the equivalent equality conditions for a big pair."""
    if not (seq.alpha_big and seq.beta_big):
        raise NotBig("equality conditions assume s_0 > 0 and s_d > 0")
    s, d = seq.s, seq.degree
    cond1 = all(s[i] ** 2 == s[i - 1] * s[i + 1] for i in range(1, d))
    cond2 = all(s[i] ** d == s[0] ** (d - i) * s[d] ** i for i in range(d + 1))
    cond3 = s[d - 1] ** d == s[0] * s[d] ** (d - 1)
    cond4 = None
    if P is not None and Q is not None:
        cond4 = check_minkowski(P, Q, seq, max_bits=max_bits).equality
    return EqualityConditions(cond1, cond2, cond3, cond4, cond4 is None)
