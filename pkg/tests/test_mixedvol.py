from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from conftest import polytopes, positive_rationals, rationals
from nefcalc.errors import InvalidInput
from nefcalc.mixedvol import (
    INTERPOLATION,
    POLARIZATION,
    NefSequence,
    intersection_sequence,
    mixed_volume,
    volume,
    volume_polynomial,
)
from nefcalc.polytope import hull, linear_combination, minkowski_sum, scale, standard_simplex, support, unit_cube
from test_polytope import monotone_chain


def shoelace(P):
    ring = monotone_chain(P.vertices)
    twice = sum(a[0] * b[1] - a[1] * b[0] for a, b in zip(ring, ring[1:] + ring[:1]))
    return Fraction(abs(twice), 2)


def mixed_area(P, Q):
    """Half the sum over edges of P of h_Q evaluated at the rotated edge vector."""
    ring = monotone_chain(P.vertices)  # counter-clockwise
    total = Fraction(0)
    for a, b in zip(ring, ring[1:] + ring[:1]):
        edge = (b[0] - a[0], b[1] - a[1])
        total += support(Q, (edge[1], -edge[0]))
    return total / 2


def test_volumes_of_standard_bodies():
    assert volume(unit_cube(3)) == 1
    for d in (1, 2, 3, 4):
        assert volume(standard_simplex(d)) == Fraction(1, factorial(d))


def test_flat_polytope_has_zero_volume():
    assert volume(hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])) == 0


def test_square_triangle_mixed_area():
    assert mixed_volume([unit_cube(2), standard_simplex(2)]) == 1
    assert volume(minkowski_sum(unit_cube(2), standard_simplex(2))) == Fraction(7, 2)


def test_cube_simplex_mixed_volumes():
    C, S = unit_cube(3), standard_simplex(3)
    assert mixed_volume([C, S, S]) == Fraction(1, 2)
    assert intersection_sequence(C, S).s == (1, 3, 6, 6)


@pytest.mark.parametrize("method", [POLARIZATION, INTERPOLATION])
def test_golden_sequences(method):
    sq, tri = unit_cube(2), standard_simplex(2)
    assert intersection_sequence(sq, sq, method).s == (2, 2, 2)
    assert intersection_sequence(sq, scale(sq, 2), method).s == (8, 4, 2)
    assert intersection_sequence(sq, tri, method).s == (1, 2, 2)


def test_wrong_arity_and_mixed_dims():
    with pytest.raises(InvalidInput):
        mixed_volume([unit_cube(2)])
    with pytest.raises(InvalidInput):
        mixed_volume([unit_cube(2), unit_cube(3)])


def test_sequence_validation_and_round_trip():
    seq = NefSequence(["1/2", 3, Fraction(5, 3)])
    assert seq.degree == 2
    assert NefSequence.from_dict(seq.to_dict()) == seq
    with pytest.raises(InvalidInput):
        NefSequence([1])
    with pytest.raises(InvalidInput):
        NefSequence([1, -1, 2])
    with pytest.raises(InvalidInput):
        NefSequence.from_dict({"d": 3, "s": ["1", "1", "1"]})


@given(polytopes(2, 9))
def test_area_matches_shoelace(P):
    assert volume(P) == shoelace(P)


@given(polytopes(2), polytopes(2))
def test_mixed_area_matches_edge_formula(P, Q):
    assert mixed_volume([P, Q]) == mixed_area(P, Q)


@given(polytopes(3, 8))
def test_volume_matches_qhull(P):
    qh = ConvexHull(np.array(P.vertices, dtype=float))
    assert float(volume(P)) == pytest.approx(qh.volume, rel=1e-9)


@given(polytopes(3, 6), polytopes(3, 6), positive_rationals(4, 3))
def test_volume_polynomial_against_qhull(P, Q, t):
    coeffs = volume_polynomial(P, Q)
    S = linear_combination(P, 1, Q, t)
    qh = ConvexHull(np.array(S.vertices, dtype=float))
    assert float(sum(c * t**k for k, c in enumerate(coeffs))) == pytest.approx(qh.volume, rel=1e-9)


@given(polytopes(3, 6), polytopes(3, 6), polytopes(3, 6))
def test_mixed_volume_is_symmetric(P, Q, R):
    values = {mixed_volume(list(p)) for p in permutations([P, Q, R])}
    assert len(values) == 1


@given(polytopes(2), polytopes(2), polytopes(2), positive_rationals(), positive_rationals())
def test_mixed_area_is_multilinear(P, Q, R, a, b):
    combo = linear_combination(P, a, Q, b)
    assert mixed_volume([combo, R]) == a * mixed_volume([P, R]) + b * mixed_volume([Q, R])


@given(polytopes(3, 6), polytopes(3, 6), polytopes(3, 6))
def test_mixed_volume_is_monotone(P, Q, R):
    bigger = hull(list(P.vertices) + list(R.vertices))
    assert mixed_volume([P, Q, Q]) <= mixed_volume([bigger, Q, Q])


@given(polytopes(3, 6), polytopes(3, 6), st.tuples(rationals(), rationals(), rationals()))
def test_mixed_volume_translation_invariant(P, Q, x):
    assert mixed_volume([P, P, Q]) == mixed_volume([P.translate(x), P, Q.translate(x)])


@given(polytopes(3, 7))
def test_diagonal_is_volume(P):
    assert mixed_volume([P, P, P]) == volume(P)


@given(polytopes(2), polytopes(2))
def test_planar_oracles_agree(P, Q):
    a = intersection_sequence(P, Q, POLARIZATION)
    b = intersection_sequence(P, Q, INTERPOLATION)
    assert a == b
    assert a.realized


@given(polytopes(3, 6), polytopes(3, 6))
def test_expansion_identity(P, Q):
    seq = intersection_sequence(P, Q)
    d = 3
    assert factorial(d) * volume(minkowski_sum(P, Q)) == sum(comb(d, i) * s for i, s in enumerate(seq.s))


@given(polytopes(3, 6), polytopes(3, 6))
def test_swapping_reverses_sequence(P, Q):
    assert intersection_sequence(Q, P).s == intersection_sequence(P, Q).reversed().s


@given(polytopes(2), positive_rationals(), positive_rationals())
def test_sequence_homogeneity(P, a, b):
    seq = intersection_sequence(scale(P, a), scale(P, b))
    base = 2 * volume(P)
    assert seq.s == tuple(base * a**i * b ** (2 - i) for i in range(3))


@given(polytopes(4, 6))
def test_four_dimensional_methods_agree(P):
    Q = standard_simplex(4)
    assert intersection_sequence(P, Q, POLARIZATION) == intersection_sequence(P, Q, INTERPOLATION)
