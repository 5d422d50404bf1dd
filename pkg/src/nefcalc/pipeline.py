"""Consolidated verification pipelines behind the ``verify`` and ``derivative`` commands.

A report is a plain dict: a list of checks, each with a ``status`` of
``pass``, ``fail`` or ``undecided``, plus the data that justifies it.
"""
from __future__ import annotations

from fractions import Fraction

from .bounds import (
    bonnesen_check,
    diskant_check,
    proportionality_test,
    radius_chain,
)
from .certified import DEFAULT_MAX_BITS, Verdict
from .errors import PrecisionExhausted, UnrealizableSequence
from .mixedvol import (
    INTERPOLATION,
    POLARIZATION,
    NefSequence,
    intersection_sequence,
    mixed_volume,
    volume_polynomial,
)
from .nefseq import check_equality_conditions, check_kt_power, check_log_concavity, check_minkowski
from .polytope import Polytope
from .radii import inradius, outradius, verify_inradius, verify_outradius
from .rational import format_rational

PASS, FAIL, UNDECIDED = "pass", "fail", "undecided"


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _verdict_status(v: Verdict, good=(Verdict.LT, Verdict.EQ)) -> str:
    if v is Verdict.UNDECIDED:
        return UNDECIDED
    return _status(v in good)


def overall_status(report: dict) -> str:
    statuses = [c["status"] for c in report["checks"]]
    if FAIL in statuses:
        return FAIL
    if UNDECIDED in statuses:
        return UNDECIDED
    return PASS


def _sequence_checks(seq: NefSequence, checks: list, slope, r, R, max_bits: int) -> None:
    if seq.degree >= 2:
        lc = check_log_concavity(seq)
        checks.append({"name": "log_concavity", "status": _status(lc.passed), **lc.to_dict()})
    kt = check_kt_power(seq)
    checks.append({"name": "kt_power", "status": _status(kt.passed), **kt.to_dict()})
    if not (seq.alpha_big and seq.beta_big) or seq.degree < 2:
        return
    try:
        chain = radius_chain(seq, r, R, max_bits)
    except UnrealizableSequence as exc:
        checks.append({"name": "radius_bounds", "status": FAIL, "error": str(exc)})
        return
    except PrecisionExhausted as exc:
        checks.append({"name": "radius_bounds", "status": UNDECIDED, "error": str(exc)})
        return
    for link in chain:
        checks.append({"name": f"chain: {link.name}", "status": _verdict_status(link.verdict),
                       "verdict": link.verdict.value})
    if slope is not None:
        dk = diskant_check(seq, slope, max_bits)
        checks.append({"name": "diskant", "status": _verdict_status(dk.comparison, (Verdict.GT, Verdict.EQ)),
                       "slope": format_rational(Fraction(slope)), **dk.to_dict()})
    if seq.degree == 2 and r is not None and R is not None:
        bn = bonnesen_check(seq, r, R, max_bits)
        checks.append({"name": "bonnesen", "status": _verdict_status(bn.comparison), **bn.to_dict()})


def verify_sequence(seq: NefSequence, slope=None, max_bits: int = DEFAULT_MAX_BITS) -> dict:
    """Checks that make sense for a bare sequence (free or realized)."""
    checks: list[dict] = []
    _sequence_checks(seq, checks, slope, None, None, max_bits)
    if seq.alpha_big and seq.beta_big:
        eq = check_equality_conditions(seq)
        checks.append({"name": "equality_conditions", "status": PASS, **eq.to_dict()})
        prop = proportionality_test(seq)
        checks.append({"name": "proportionality", "status": PASS, **prop.to_dict()})
    report = {"input": "sequence", "sequence": seq.to_dict(), "checks": checks}
    report["status"] = overall_status(report)
    return report


def derivative_report(P: Polytope, Q: Polytope) -> dict:
    """Compare the ``t`` coefficient of ``vol(P + tQ)`` with ``d V(P[d-1], Q)``."""
    d = P.dim
    coeffs = volume_polynomial(P, Q)
    mixed = mixed_volume([P] * (d - 1) + [Q])
    ok = coeffs[1] == d * mixed
    return {
        "name": "derivative_identity",
        "status": _status(ok),
        "t_coefficient": format_rational(coeffs[1]),
        "d_times_mixed_volume": format_rational(d * mixed),
        "polynomial": [format_rational(c) for c in coeffs],
    }


def verify_pair(P: Polytope, Q: Polytope, max_bits: int = DEFAULT_MAX_BITS) -> dict:
    """Every applicable check for the pair ``alpha = P``, ``beta = Q``."""
    checks: list[dict] = []
    seq = intersection_sequence(P, Q, POLARIZATION)
    alt = intersection_sequence(P, Q, INTERPOLATION)
    checks.append({"name": "oracle_agreement", "status": _status(seq.s == alt.s),
                   "provenance": [POLARIZATION, INTERPOLATION],
                   "interpolation": [format_rational(x) for x in alt.s]})
    big = seq.alpha_big and seq.beta_big
    r = R = None
    if big and P.is_full_dimensional and Q.is_full_dimensional:
        rin, rout = inradius(P, Q), outradius(P, Q)
        checks.append({"name": "radii_certificates",
                       "status": _status(verify_inradius(P, Q, rin) and verify_outradius(P, Q, rout)),
                       "inradius": rin.to_dict(), "outradius": rout.to_dict()})
        r, R = rin.t_star, rout.t_star
    _sequence_checks(seq, checks, r, r, R, max_bits)
    mk = check_minkowski(P, Q, seq, max_bits)
    checks.append({"name": "minkowski", "status": _verdict_status(mk.verdict, (Verdict.GT, Verdict.EQ))
                   if mk.identity_holds else FAIL, **mk.to_dict()})
    if big:
        eq = check_equality_conditions(seq, P, Q, max_bits)
        checks.append({"name": "equality_conditions", "status": _status(eq.all_equivalent), **eq.to_dict()})
        prop = proportionality_test(seq, P, Q)
        consistent = prop.geometric_witness is None or prop.geometric_witness == prop.proportional
        checks.append({"name": "proportionality", "status": _status(consistent), **prop.to_dict()})
    checks.append(derivative_report(P, Q))
    seq_dict = seq.to_dict()
    seq_dict["provenance"] = POLARIZATION
    report = {"input": "pair", "sequence": seq_dict, "checks": checks}
    report["status"] = overall_status(report)
    return report


def sequence_report(P: Polytope, Q: Polytope) -> dict:
    seq = intersection_sequence(P, Q, POLARIZATION)
    alt = intersection_sequence(P, Q, INTERPOLATION)
    out = seq.to_dict()
    out["provenance"] = {"s": POLARIZATION, "cross_check": INTERPOLATION, "agree": seq.s == alt.s}
    return out
