"""Certified real arithmetic for expressions with fractional powers.

A :class:`CertifiedReal` is an expression tree over rationals.  It can be
enclosed in a rational interval at any working precision (outward rounded,
so the true value is always inside), and most expressions met in practice
also carry an exact normal form: a finite sum ``sum c_k * b_k^(1/n_k)`` of
real radicals with pairwise irrational ratios.  Such sums vanish only when
empty (radicals with pairwise irrational ratios are linearly independent
over Q), which is what lets a comparison certify an exact tie.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import Union

import gmpy2

from .errors import DomainError, PrecisionExhausted

DEFAULT_START_BITS = 64
DEFAULT_MAX_BITS = 4096

Number = Union[int, Fraction, "CertifiedReal"]


class Verdict(enum.Enum):
    LT = "LT"
    GT = "GT"
    EQ = "EQ"
    UNDECIDED = "UNDECIDED"


# ---------------------------------------------------------------------------
# exact radical sums


def _iroot_exact(n: int, k: int) -> int | None:
    """Integer k-th root of ``n >= 0`` if ``n`` is a perfect k-th power."""
    r, exact = gmpy2.iroot(gmpy2.mpz(n), k)
    return int(r) if exact else None


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            if p not in out:
                out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _monomial(coef: Fraction, radicand: Fraction, root: int) -> tuple[Fraction, int, int]:
    """Normalise ``coef * radicand^(1/root)`` to ``(c, base, n)`` with integer base."""
    if radicand <= 0:
        raise DomainError("radicand must be positive")
    u, v = radicand.numerator, radicand.denominator
    # (u/v)^(1/n) = (u v^(n-1))^(1/n) / v
    base = u * v ** (root - 1)
    coef = coef / v
    changed = True
    while changed and root > 1:
        changed = False
        for p in _prime_factors(root):
            r = _iroot_exact(base, p)
            if r is not None:
                base, root, changed = r, root // p, True
                break
    if root == 1:
        return coef * base, 1, 1
    return coef, base, root


@dataclass(frozen=True)
class RadicalSum:
    """Exact value ``sum coef * base^(1/root)``; the empty sum is zero."""

    terms: tuple[tuple[Fraction, int, int], ...]

    @classmethod
    def rational(cls, q) -> "RadicalSum":
        q = Fraction(q)
        return cls(((q, 1, 1),) if q else ())

    @classmethod
    def _merge(cls, terms) -> "RadicalSum":
        out: list[list] = []
        for coef, base, root in terms:
            if coef == 0:
                continue
            for slot in out:
                ratio = _radical_ratio(base, root, slot[1], slot[2])
                if ratio is not None:
                    # coef * m = coef * ratio * m_slot
                    slot[0] += coef * ratio
                    break
            else:
                out.append([coef, base, root])
        return cls(tuple(sorted((Fraction(c), b, r) for c, b, r in out if c != 0)))

    def is_zero(self) -> bool:
        return not self.terms

    def as_rational(self) -> Fraction | None:
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and self.terms[0][2] == 1:
            return self.terms[0][0]
        return None

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        return RadicalSum._merge(self.terms + other.terms)

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(tuple((-c, b, r) for c, b, r in self.terms))

    def __sub__(self, other: "RadicalSum") -> "RadicalSum":
        return self + (-other)

    def __mul__(self, other: "RadicalSum") -> "RadicalSum":
        out = []
        for c1, b1, r1 in self.terms:
            for c2, b2, r2 in other.terms:
                n = lcm(r1, r2)
                radicand = Fraction(b1 ** (n // r1) * b2 ** (n // r2))
                out.append(_monomial(c1 * c2, radicand, n))
        return RadicalSum._merge(out)

    def power(self, k: int) -> "RadicalSum | None":
        if k < 0:
            inv = self.inverse()
            return None if inv is None else inv.power(-k)
        acc = RadicalSum.rational(1)
        for _ in range(k):
            acc = acc * self
        return acc

    def inverse(self) -> "RadicalSum | None":
        if not self.terms:
            raise DomainError("division by exact zero")
        if len(self.terms) == 1:
            c, b, r = self.terms[0]
            # 1/(c b^(1/r)) = b^((r-1)/r) / (c b)
            return RadicalSum((_monomial(1 / (c * b), Fraction(b ** (r - 1)), r),)) if r > 1 else RadicalSum.rational(1 / c)
        if len(self.terms) == 2 and all(r <= 2 for _, _, r in self.terms):
            (c1, b1, r1), (c2, b2, r2) = self.terms
            conj = RadicalSum._merge([(c1, b1, r1), (-c2, b2, r2)])
            norm = (self * conj).as_rational()
            if norm is None or norm == 0:
                return None
            return conj * RadicalSum.rational(1 / norm)
        return None

    def rational_power(self, e: Fraction) -> "RadicalSum | None":
        """``self^e`` for a single positive monomial (or zero with e > 0)."""
        if not self.terms:
            if e > 0:
                return self
            raise DomainError("nonpositive power of zero")
        if len(self.terms) != 1:
            return None
        c, b, r = self.terms[0]
        if c < 0:
            raise DomainError("fractional power of a negative number")
        p, q = e.numerator, e.denominator
        # (c b^(1/r))^(p/q) = (c^(r) b)^(p/(rq)) = ((c^r b)^p)^(1/(rq))
        radicand = (c ** r * b) ** abs(p)
        mono = RadicalSum((_monomial(Fraction(1), Fraction(radicand), r * q),))
        return mono if p > 0 else mono.inverse()

    def sign(self) -> int | None:
        """Exact sign when decidable by clearing to integer powers (at most two terms)."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            return 1 if self.terms[0][0] > 0 else -1
        if len(self.terms) == 2:
            (c1, b1, r1), (c2, b2, r2) = self.terms
            if (c1 > 0) == (c2 > 0):
                return 1 if c1 > 0 else -1
            # compare |c1| b1^(1/r1) with |c2| b2^(1/r2) after raising to n = lcm
            n = lcm(r1, r2)
            lhs = abs(c1) ** n * Fraction(b1) ** (n // r1)
            rhs = abs(c2) ** n * Fraction(b2) ** (n // r2)
            bigger_first = lhs > rhs
            return (1 if c1 > 0 else -1) if bigger_first else (1 if c2 > 0 else -1)
        return None

    def __float__(self) -> float:
        return float(sum(float(c) * float(b) ** (1.0 / r) for c, b, r in self.terms))


def _radical_ratio(b1: int, r1: int, b2: int, r2: int) -> Fraction | None:
    """``b1^(1/r1) / b2^(1/r2)`` if rational, else None."""
    n = lcm(r1, r2)
    q = Fraction(b1 ** (n // r1), b2 ** (n // r2))
    num = _iroot_exact(q.numerator, n)
    if num is None:
        return None
    den = _iroot_exact(q.denominator, n)
    if den is None:
        return None
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# interval enclosures


def _round_down(x: Fraction, bits: int) -> Fraction:
    if x == 0:
        return x
    k = bits - (abs(x.numerator).bit_length() - x.denominator.bit_length())
    if k >= 0:
        return Fraction((x.numerator << k) // x.denominator, 1 << k)
    return Fraction((x.numerator // (x.denominator << -k)) << -k)


def _round_up(x: Fraction, bits: int) -> Fraction:
    return -_round_down(-x, bits)


def _root_down(y: Fraction, q: int, bits: int) -> Fraction:
    if y <= 0:
        return Fraction(0)
    e = y.numerator.bit_length() - y.denominator.bit_length()
    k = bits - floor(e / q)
    scaled = y * Fraction(2) ** (k * q)
    r, _ = gmpy2.iroot(gmpy2.mpz(scaled.numerator // scaled.denominator), q)
    return Fraction(int(r)) / Fraction(2) ** k


def _root_up(y: Fraction, q: int, bits: int) -> Fraction:
    if y <= 0:
        return Fraction(0)
    e = y.numerator.bit_length() - y.denominator.bit_length()
    k = bits - floor(e / q)
    scaled = y * Fraction(2) ** (k * q)
    n = -((-scaled.numerator) // scaled.denominator)
    r, exact = gmpy2.iroot(gmpy2.mpz(n), q)
    r = int(r) + (0 if exact else 1)
    return Fraction(r) / Fraction(2) ** k


def _int_power(lo: Fraction, hi: Fraction, k: int) -> tuple[Fraction, Fraction]:
    a, b = lo ** k, hi ** k
    if k % 2 == 0 and lo < 0 < hi:
        return Fraction(0), max(a, b)
    return min(a, b), max(a, b)


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction
    bits: int
    exact: bool = False

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


class CertifiedReal:
    """Immutable expression tree over rationals with certified enclosures."""

    __slots__ = ("op", "args", "_exact", "_exact_done")

    def __init__(self, op: str, args: tuple):
        self.op = op
        self.args = args
        self._exact = None
        self._exact_done = False

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, value) -> "CertifiedReal":
        if isinstance(value, CertifiedReal):
            return value
        if isinstance(value, float):
            raise TypeError("floats are not exact; pass a Fraction")
        return cls("const", (Fraction(value),))

    @staticmethod
    def _wrap(x: Number) -> "CertifiedReal":
        return CertifiedReal.const(x)

    def __add__(self, other: Number) -> "CertifiedReal":
        return CertifiedReal("add", (self, self._wrap(other)))

    def __radd__(self, other: Number) -> "CertifiedReal":
        return self._wrap(other) + self

    def __sub__(self, other: Number) -> "CertifiedReal":
        return CertifiedReal("sub", (self, self._wrap(other)))

    def __rsub__(self, other: Number) -> "CertifiedReal":
        return self._wrap(other) - self

    def __mul__(self, other: Number) -> "CertifiedReal":
        return CertifiedReal("mul", (self, self._wrap(other)))

    def __rmul__(self, other: Number) -> "CertifiedReal":
        return self._wrap(other) * self

    def __truediv__(self, other: Number) -> "CertifiedReal":
        return CertifiedReal("div", (self, self._wrap(other)))

    def __rtruediv__(self, other: Number) -> "CertifiedReal":
        return self._wrap(other) / self

    def __neg__(self) -> "CertifiedReal":
        return CertifiedReal("neg", (self,))

    def __pow__(self, exponent) -> "CertifiedReal":
        e = Fraction(exponent)
        if e.denominator == 1:
            return CertifiedReal("ipow", (self, int(e)))
        return CertifiedReal("rpow", (self, e))

    def root(self, n: int) -> "CertifiedReal":
        return self ** Fraction(1, n)

    # exact normal form --------------------------------------------------
    @property
    def exact(self) -> RadicalSum | None:
        if not self._exact_done:
            self._exact = self._compute_exact()
            self._exact_done = True
        return self._exact

    def _compute_exact(self) -> RadicalSum | None:
        op, args = self.op, self.args
        if op == "const":
            return RadicalSum.rational(args[0])
        if op == "neg":
            a = args[0].exact
            return None if a is None else -a
        if op in ("add", "sub", "mul", "div"):
            a, b = args[0].exact, args[1].exact
            if op == "div" and b is not None and b.is_zero():
                raise DomainError("division by exact zero")
            if a is None or b is None:
                return None
            if op == "add":
                return a + b
            if op == "sub":
                return a - b
            if op == "mul":
                return a * b
            inv = b.inverse()
            return None if inv is None else a * inv
        if op == "ipow":
            a = args[0].exact
            return None if a is None else a.power(args[1])
        if op == "rpow":
            a = args[0].exact
            if a is None:
                return None
            s = a.sign()
            if s is not None and s < 0:
                raise DomainError("fractional power of a negative number")
            return a.rational_power(args[1])
        raise AssertionError(op)

    def exact_sign(self) -> int | None:
        ex = self.exact
        return None if ex is None else ex.sign()

    # enclosures ---------------------------------------------------------
    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value; raises ``PrecisionExhausted``."""
        op, args = self.op, self.args
        if op == "const":
            return args[0], args[0]
        ex = self.exact
        if ex is not None:
            q = ex.as_rational()
            if q is not None:
                return q, q
        if op == "neg":
            lo, hi = args[0].enclosure(bits)
            return -hi, -lo
        if op in ("add", "sub", "mul", "div"):
            alo, ahi = args[0].enclosure(bits)
            blo, bhi = args[1].enclosure(bits)
            if op == "add":
                lo, hi = alo + blo, ahi + bhi
            elif op == "sub":
                lo, hi = alo - bhi, ahi - blo
            else:
                if op == "div":
                    if blo <= 0 <= bhi:
                        raise PrecisionExhausted
                    blo, bhi = 1 / bhi, 1 / blo
                prods = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
                lo, hi = min(prods), max(prods)
            return _round_down(lo, bits), _round_up(hi, bits)
        if op == "ipow":
            k = args[1]
            lo, hi = args[0].enclosure(bits)
            if k < 0:
                if lo <= 0 <= hi:
                    raise PrecisionExhausted
                lo, hi = 1 / hi, 1 / lo
                k = -k
            lo, hi = _int_power(lo, hi, k)
            return _round_down(lo, bits), _round_up(hi, bits)
        if op == "rpow":
            e: Fraction = args[1]
            base = args[0]
            lo, hi = base.enclosure(bits)
            if lo < 0 or (lo == 0 and e < 0):
                s = base.exact_sign()
                if s == 0 and e > 0:
                    return Fraction(0), Fraction(0)
                if s is not None and s < 0 or hi < 0:
                    raise DomainError("fractional power of a negative number")
                if s is not None and s > 0 and e > 0:
                    lo = Fraction(0)
                else:
                    raise PrecisionExhausted
            p, q = e.numerator, e.denominator
            if p < 0:
                lo, hi = 1 / hi, 1 / lo
                p = -p
            plo, phi = lo ** p, hi ** p
            return _root_down(plo, q, bits), _root_up(phi, q, bits)
        raise AssertionError(op)

    def refine(
        self,
        width_bits: int = 64,
        max_bits: int = DEFAULT_MAX_BITS,
        start_bits: int = DEFAULT_START_BITS,
    ) -> Enclosure:
        """Enclosure of width at most ``2^-width_bits``, doubling precision as needed.

        Successive enclosures are intersected, so refinement never widens.
        Returns the best enclosure found if ``max_bits`` is reached first.
        """
        ex = self.exact
        if ex is not None:
            q = ex.as_rational()
            if q is not None:
                return Enclosure(q, q, 0, exact=True)
        target = Fraction(1, 1 << width_bits)
        lo = hi = None
        bits = start_bits
        used = bits
        while bits <= max_bits:
            used = bits
            try:
                a, b = self.enclosure(bits)
            except PrecisionExhausted:
                bits *= 2
                continue
            lo = a if lo is None else max(lo, a)
            hi = b if hi is None else min(hi, b)
            if hi - lo <= target:
                break
            bits *= 2
        if lo is None:
            raise PrecisionExhausted
        return Enclosure(lo, hi, used)

    def sign(self, max_bits: int = DEFAULT_MAX_BITS, start_bits: int = DEFAULT_START_BITS) -> int | None:
        """Certified sign, or None if undecided at ``max_bits``."""
        s = self.exact_sign()
        if s is not None:
            return s
        bits = start_bits
        while bits <= max_bits:
            try:
                lo, hi = self.enclosure(bits)
            except PrecisionExhausted:
                bits *= 2
                continue
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if lo == hi == 0:
                return 0
            bits *= 2
        return None

    def __float__(self) -> float:
        try:
            lo, hi = self.enclosure(64)
        except PrecisionExhausted:
            lo, hi = self.enclosure(1024)
        return float((lo + hi) / 2)

    def __repr__(self) -> str:
        return f"CertifiedReal(~{float(self):.17g})"


def as_certified(x: Number) -> CertifiedReal:
    return CertifiedReal.const(x)


def compare_certified(
    a: Number,
    b: Number,
    max_bits: int = DEFAULT_MAX_BITS,
    start_bits: int = DEFAULT_START_BITS,
) -> Verdict:
    """Certified ordering of two expressions.

    Exact ties are proven by the radical normal form; strict orderings by
    disjoint interval enclosures at increasing precision.
    """
    diff = as_certified(a) - as_certified(b)
    s = diff.sign(max_bits=max_bits, start_bits=start_bits)
    if s is None:
        return Verdict.UNDECIDED
    return {1: Verdict.GT, -1: Verdict.LT, 0: Verdict.EQ}[s]
