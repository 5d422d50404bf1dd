from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import positive_rationals, rationals
from nefcalc.certified import CertifiedReal, RadicalSum, Verdict, compare_certified
from nefcalc.errors import DomainError

C = CertifiedReal.const
sqrt2, sqrt3 = C(2).root(2), C(3).root(2)


def test_radical_identities_are_exact_ties():
    assert compare_certified(sqrt2 * sqrt2, 2) is Verdict.EQ
    assert compare_certified(C(8).root(2), 2 * sqrt2) is Verdict.EQ
    assert compare_certified(C(2).root(3) ** 3, 2) is Verdict.EQ
    assert compare_certified((sqrt2 + sqrt3) ** 2, 5 + 2 * C(6).root(2)) is Verdict.EQ
    assert compare_certified(C(Fraction(9, 4)) ** Fraction(3, 2), Fraction(27, 8)) is Verdict.EQ


def test_close_strict_orderings():
    assert compare_certified(sqrt2, Fraction(577, 408)) is Verdict.LT
    assert compare_certified(sqrt2 + sqrt3, Fraction(314, 100)) is Verdict.GT
    assert compare_certified(C(2).root(3), Fraction(126, 100)) is Verdict.LT


def test_nested_radical_is_undecided_at_cap():
    nested = (5 + 2 * C(6).root(2)).root(2)
    assert compare_certified(nested, sqrt2 + sqrt3, max_bits=256) is Verdict.UNDECIDED


def test_three_radicals_need_more_bits():
    x = sqrt2 + sqrt3 + C(5).root(2)
    near = x.refine(width_bits=200, max_bits=512).lo - Fraction(1, 2**100)
    assert compare_certified(x, near, max_bits=64) is Verdict.UNDECIDED
    assert compare_certified(x, near, max_bits=512) is Verdict.GT


def test_negative_base_raises():
    with pytest.raises(DomainError):
        (C(-2) ** Fraction(1, 2)).enclosure(64)


def test_floats_rejected():
    with pytest.raises(TypeError):
        C(0.5)


def test_refine_width():
    e = sqrt2.refine(width_bits=100, max_bits=1024)
    assert e.hi - e.lo <= Fraction(1, 2**100)
    assert e.lo ** 2 <= 2 <= e.hi ** 2
    assert C(Fraction(1, 3)).refine().exact


def test_radical_sum_merges_like_terms():
    r = (sqrt2 + C(8).root(2) - 3 * sqrt2).exact
    assert r is not None and r.is_zero()
    assert RadicalSum.rational(Fraction(3, 4)).as_rational() == Fraction(3, 4)


@given(rationals(), rationals())
def test_rational_comparison_matches_fraction(a, b):
    expected = Verdict.LT if a < b else Verdict.GT if a > b else Verdict.EQ
    assert compare_certified(a, b) is expected


@given(positive_rationals(50, 7), positive_rationals(50, 7), st.integers(2, 5))
def test_roots_preserve_order(a, b, n):
    expected = Verdict.LT if a < b else Verdict.GT if a > b else Verdict.EQ
    assert compare_certified(C(a).root(n), C(b).root(n)) is expected


@given(positive_rationals(50, 7), st.integers(2, 5))
def test_root_then_power_is_identity(a, n):
    assert compare_certified(C(a).root(n) ** n, a) is Verdict.EQ


@given(positive_rationals(30, 5), positive_rationals(30, 5), positive_rationals(30, 5))
def test_sum_of_square_roots_enclosure_contains_float(a, b, c):
    x = C(a).root(2) + C(b).root(2) - C(c).root(2)
    e = x.refine(width_bits=40)
    approx = float(a) ** 0.5 + float(b) ** 0.5 - float(c) ** 0.5
    assert float(e.lo) - 1e-9 <= approx <= float(e.hi) + 1e-9


@given(positive_rationals(20, 5), positive_rationals(20, 5))
def test_comparison_is_antisymmetric(a, b):
    x, y = C(a).root(3) + C(b).root(2), C(b).root(3) + C(a).root(2)
    flip = {Verdict.LT: Verdict.GT, Verdict.GT: Verdict.LT, Verdict.EQ: Verdict.EQ}
    assert compare_certified(y, x) is flip[compare_certified(x, y)]
