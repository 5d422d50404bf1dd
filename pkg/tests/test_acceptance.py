"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed at the end of the run
(``pytest tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``).
"""
import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from nefcalc.bounds import (
    bonnesen_check,
    bounds_report,
    diskant_check,
    diskant_sides,
    inradius_bounds,
    is_homothetic_witness,
    proportionality_test,
)
from nefcalc.certified import Verdict, compare_certified
from nefcalc.generate import random_pairs, random_polytope
from nefcalc.mixedvol import INTERPOLATION, POLARIZATION, NefSequence, intersection_sequence, mixed_volume, volume_polynomial
from nefcalc.nefseq import check_equality_conditions, check_kt_power, check_log_concavity, check_minkowski
from nefcalc.polytope import scale, standard_simplex, unit_cube
from nefcalc.radii import inradius, outradius, verify_inradius, verify_outradius

SEED = 20240601
CAP_BITS = 1024


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def pairs():
    return random_pairs(SEED, dims=(2, 3), max_vertices=10, count=200)


@pytest.fixture(scope="module")
def campaign(pairs):
    """Both mixed-volume algorithms on every pair, timed."""
    start = time.perf_counter()
    polar = [intersection_sequence(P, Q, POLARIZATION) for P, Q in pairs]
    interp = [intersection_sequence(P, Q, INTERPOLATION) for P, Q in pairs]
    return polar, interp, time.perf_counter() - start


@pytest.fixture(scope="module")
def radii(pairs):
    return [(inradius(P, Q), outradius(P, Q)) for P, Q in pairs[:100]]


def _homothetic(seed: int, count: int, dims=(2, 3)):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        P = random_polytope(rng, dims[k % len(dims)], 10)
        lam = Fraction(rng.randint(1, 12), rng.randint(1, 5))
        x = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(P.dim)]
        out.append((P, scale(P, lam).translate(x), lam))
    return out


@pytest.fixture(scope="module")
def homothetic():
    return _homothetic(SEED + 1, 50)


def test_criterion_1_dual_oracle_agreement(campaign):
    polar, interp, elapsed = campaign
    mismatches = [k for k, (a, b) in enumerate(zip(polar, interp)) if a.s != b.s]
    ok = not mismatches and elapsed <= 60
    record(1, "polarization and interpolation agree exactly", ok,
           f"{200 - len(mismatches)}/200 pairs equal, {elapsed:.1f} s of 60 s")


def test_criterion_2_khovanskii_teissier(campaign):
    polar, _, _ = campaign
    bad = [k for k, s in enumerate(polar) if not (check_log_concavity(s).passed and check_kt_power(s).passed)]
    free = NefSequence([5, 4, 5])
    lc, kt = check_log_concavity(free), check_kt_power(free)
    free_ok = lc.failures == [1] and kt.failures == [1] and lc.verdicts[0].deficit == -9
    record(2, "log-concavity and power form on realized sequences; (5,4,5) fails at i=1",
           not bad and free_ok,
           f"{200 - len(bad)}/200 realized pass, free failures lc={lc.failures} kt={kt.failures}")


def test_criterion_3_radius_sandwich(pairs, campaign, radii):
    polar, _, _ = campaign
    failures, undecided, max_used = [], [], 0
    for k in range(100):
        P, Q = pairs[k]
        rin, rout = radii[k]
        if not (verify_inradius(P, Q, rin) and verify_outradius(P, Q, rout)):
            failures.append(k)
            continue
        rep = bounds_report(polar[k], rin.t_star, rout.t_star, max_bits=CAP_BITS)
        max_used = max(max_used, rep.precision_bits_used)
        if any(link.undecided for link in rep.chain):
            undecided.append(k)
        elif not all(link.holds for link in rep.chain):
            failures.append(k)
    record(3, "lower_G <= r_LP <= s_d/s_(d-1) <= s_1/s_0 <= R_LP <= upper_H",
           not failures and not undecided,
           f"{100 - len(failures) - len(undecided)}/100 chains certified, "
           f"{len(undecided)} undecided, cap {CAP_BITS} bits, max used {max_used}")


def test_criterion_4_diskant(pairs, campaign, radii, homothetic):
    polar, _, _ = campaign
    bad = [k for k in range(100) if not diskant_check(polar[k], radii[k][0].t_star, CAP_BITS).holds]
    ties = 0
    for P, Q, lam in homothetic:
        seq = intersection_sequence(P, Q)
        r = inradius(P, Q).t_star
        lhs, rhs = diskant_sides(seq, r)
        if lhs.exact is not None and lhs.exact.is_zero() and rhs.exact is not None and rhs.exact.is_zero():
            ties += diskant_check(seq, r, CAP_BITS).exact_tie
    record(4, "Diskant at the LP slope; both sides exactly 0 on homothetic pairs",
           not bad and ties == len(homothetic),
           f"{100 - len(bad)}/100 hold, {ties}/{len(homothetic)} homothetic exact zeros")


def test_criterion_5_equality_and_proportionality(homothetic):
    homo_ok = 0
    for P, Q, lam in homothetic:
        seq = intersection_sequence(P, Q)
        eq = check_equality_conditions(seq)
        lower, upper = inradius_bounds(seq, CAP_BITS)
        prop = proportionality_test(seq, P, Q)
        homo_ok += (
            eq.cond1 and eq.cond2 and eq.cond3
            and compare_certified(lower, upper, CAP_BITS) is Verdict.EQ
            and compare_certified(lower, 1 / lam, CAP_BITS) is Verdict.EQ
            and prop.proportional and prop.geometric_witness is True
            and compare_certified(prop.ratio, 1 / lam, CAP_BITS) is Verdict.EQ
        )
    generic = random_pairs(SEED + 2, count=50)
    agree = fail_together = 0
    for P, Q in generic:
        eq = check_equality_conditions(intersection_sequence(P, Q))
        agree += eq.cond1 == eq.cond2 == eq.cond3
        fail_together += not (eq.cond1 or eq.cond2 or eq.cond3)
    record(5, "equality conditions and proportionality",
           homo_ok == 50 and agree == 50 and fail_together == 50,
           f"homothetic {homo_ok}/50 collapse to 1/lambda, generic {fail_together}/50 fail together, "
           f"pairwise agreement {agree}/50")


def test_criterion_6_bonnesen():
    polygons = random_pairs(SEED + 3, dims=(2,), count=100)
    bad = []
    for k, (P, Q) in enumerate(polygons):
        seq = intersection_sequence(P, Q)
        if not bonnesen_check(seq, inradius(P, Q).t_star, outradius(P, Q).t_star, CAP_BITS).holds:
            bad.append(k)
    equal = 0
    plane = _homothetic(SEED + 4, 20, dims=(2,))
    for P, Q, _ in plane:
        seq = intersection_sequence(P, Q)
        equal += bonnesen_check(seq, inradius(P, Q).t_star, outradius(P, Q).t_star, CAP_BITS).equality
    record(6, "Bonnesen with LP radii", not bad and equal == len(plane),
           f"{100 - len(bad)}/100 polygon pairs hold, {equal}/{len(plane)} homothetic equalities")


def test_criterion_7_derivative_identity(pairs):
    bad = []
    for k, (P, Q) in enumerate(pairs):
        d = P.dim
        if volume_polynomial(P, Q)[1] != d * mixed_volume([P] * (d - 1) + [Q]):
            bad.append(k)
    record(7, "t-coefficient of vol(P+tQ) equals d V(P[d-1],Q)", not bad,
           f"{200 - len(bad)}/200 exact")


def test_criterion_8_minkowski(pairs, campaign, homothetic):
    polar, _, _ = campaign
    bad = []
    for k, (P, Q) in enumerate(pairs):
        rep = check_minkowski(P, Q, polar[k], CAP_BITS)
        if not (rep.holds and rep.identity_holds):
            bad.append(k)
        elif rep.equality and not is_homothetic_witness(P, Q, inradius(P, Q).t_star):
            bad.append(k)
    equal = sum(check_minkowski(P, Q, max_bits=CAP_BITS).equality for P, Q, _ in homothetic)
    record(8, "Minkowski superadditivity", not bad and equal == len(homothetic),
           f"{200 - len(bad)}/200 certified, {equal}/{len(homothetic)} homothetic exact equalities")


def test_criterion_9_golden_values():
    sq, tri = unit_cube(2), standard_simplex(2)
    big = scale(sq, 2)
    checks = {
        "s(square, 2 square)": intersection_sequence(sq, big).s == (8, 4, 2),
        "r = R = 1/2": inradius(sq, big).t_star == outradius(sq, big).t_star == Fraction(1, 2),
        "s(square, triangle)": intersection_sequence(sq, tri).s == (1, 2, 2),
        "r = 1, R = 2": inradius(sq, tri).t_star == 1 and outradius(sq, tri).t_star == 2,
    }
    dk = diskant_check(NefSequence([1, 2, 2]), 1)
    lhs, rhs = diskant_sides(NefSequence([1, 2, 2]), 1)
    checks["Diskant 2 - 1 = 1"] = (
        lhs.exact.as_rational() == 2 and rhs.exact.as_rational() == 1 and dk.deficit.lo == dk.deficit.hi == 1
    )
    missed = [name for name, ok in checks.items() if not ok]
    record(9, "golden values", not missed, "all exact" if not missed else "missed: " + ", ".join(missed))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
