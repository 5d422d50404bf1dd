"""Command-line front end.

Exit codes: 0 everything passed, 2 input error, 3 certified violation,
4 a comparison stayed undecided at the precision cap.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import jsonio
from .bounds import bounds_report
from .certified import DEFAULT_MAX_BITS
from .errors import NefcalcError, PrecisionExhausted, UnrealizableSequence
from .generate import random_polytopes
from .mixedvol import intersection_sequence, mixed_volume
from .pipeline import FAIL, UNDECIDED, derivative_report, sequence_report, verify_pair, verify_sequence
from .radii import inradius, outradius
from .rational import format_rational, parse_rational

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_UNDECIDED = 0, 2, 3, 4
ENV_PRECISION = "NEFCALC_PRECISION_BITS"


def precision_cap(flag: int | None) -> int:
    """Flag beats environment beats the default cap."""
    if flag is not None:
        return flag
    env = os.environ.get(ENV_PRECISION)
    if env:
        try:
            return int(env)
        except ValueError:
            raise NefcalcError(f"{ENV_PRECISION} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_BITS


def _emit(payload: dict, as_json: bool, text: str) -> None:
    sys.stdout.write(jsonio.dumps(payload) if as_json else text)


def _load_pair_or_sequence(paths: list[str]):
    if len(paths) == 1:
        data = jsonio.load_json(paths[0])
        if not jsonio.is_sequence(data):
            raise NefcalcError(f"{paths[0]} is not a sequence file; pass two polytope files instead")
        return jsonio.NefSequence.from_dict(data), None
    if len(paths) == 2:
        P, Q = (jsonio.load_polytope(p) for p in paths)
        if P.dim != Q.dim:
            raise NefcalcError(f"dimension mismatch: {P.dim} vs {Q.dim}")
        return None, (P, Q)
    raise NefcalcError("expected one sequence file or two polytope files")


def _plain(values) -> str:
    return ", ".join(str(Fraction(v)) for v in values)


def _render_checks(report: dict) -> str:
    lines = [f"s = ({_plain(report['sequence']['s'])})"]
    for check in report["checks"]:
        extra = ""
        if check.get("failures") or "indices" in check and not check.get("passed", True):
            bad = [i for i in check["indices"] if not i["holds"]]
            extra = "  " + ", ".join(f"i={i['i']} deficit={i['deficit']}" for i in bad)
        elif "error" in check:
            extra = "  " + check["error"]
        elif "verdict" in check:
            extra = f"  [{check['verdict']}]"
        lines.append(f"{check['status'].upper():9} {check['name']}{extra}")
    lines.append(f"overall: {report['status']}")
    return "\n".join(lines) + "\n"


def _exit_for(report: dict) -> int:
    if report["status"] == FAIL:
        return EXIT_VIOLATION
    if report["status"] == UNDECIDED:
        undecided = [c["name"] for c in report["checks"] if c["status"] == UNDECIDED]
        print("undecided at precision cap: " + ", ".join(undecided), file=sys.stderr)
        return EXIT_UNDECIDED
    return EXIT_OK


# -- subcommands -----------------------------------------------------------------


def cmd_mixedvol(args) -> int:
    polys = [jsonio.load_polytope(p) for p in args.files]
    dims = {P.dim for P in polys}
    if len(dims) != 1:
        raise NefcalcError(f"inconsistent dimensions {sorted(dims)}")
    d = dims.pop()
    payload: dict = {"d": d}
    lines = []
    if len(polys) == d:
        V = mixed_volume(polys)
        payload["V"] = format_rational(V)
        lines.append(f"V = {V}")
    if len(polys) == 2:
        seq = intersection_sequence(*polys)
        payload["sequence"] = seq.to_dict()
        lines.append(f"s = ({', '.join(str(x) for x in seq.s)})")
    if not lines:
        raise NefcalcError(f"need {d} polytopes for a mixed volume (or 2 for a sequence)")
    _emit(payload, args.json, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_sequence(args) -> int:
    P, Q = (jsonio.load_polytope(p) for p in args.files)
    rep = sequence_report(P, Q)
    text = f"s = ({_plain(rep['s'])})  [{rep['provenance']['s']}; interpolation agrees: {rep['provenance']['agree']}]\n"
    _emit(rep, args.json, text)
    return EXIT_OK if rep["provenance"]["agree"] else EXIT_VIOLATION


def cmd_verify(args) -> int:
    cap = precision_cap(args.precision_bits)
    seq, pair = _load_pair_or_sequence(args.files)
    if pair is not None:
        report = verify_pair(*pair, max_bits=cap)
    else:
        slope = parse_rational(args.slope) if args.slope is not None else None
        report = verify_sequence(seq, slope, max_bits=cap)
    _emit(report, args.json, _render_checks(report))
    return _exit_for(report)


def cmd_bounds(args) -> int:
    cap = precision_cap(args.precision_bits)
    seq, pair = _load_pair_or_sequence(args.files)
    r = R = None
    if pair is not None:
        P, Q = pair
        seq = intersection_sequence(P, Q)
        r, R = inradius(P, Q).t_star, outradius(P, Q).t_star
    slope = parse_rational(args.slope) if args.slope is not None else r
    try:
        rep = bounds_report(seq, r, R, slope, width_bits=args.width_bits, max_bits=cap)
    except UnrealizableSequence as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    payload = rep.to_dict()
    if r is not None:
        payload["r"] = format_rational(r)
        payload["R"] = format_rational(R)
    lines = [
        f"s = ({', '.join(str(x) for x in seq.s)})",
        f"inradius  in [{float(rep.inradius_lower.lo):.12g}, {float(rep.inradius_upper.hi):.12g}]"
        + (f"  LP r = {r}" if r is not None else ""),
        f"outradius in [{float(rep.outradius_lower.lo):.12g}, {float(rep.outradius_upper.hi):.12g}]"
        + (f"  LP R = {R}" if R is not None else ""),
    ]
    for link in rep.chain:
        lines.append(f"{link.verdict.value:9} {link.name}")
    if rep.diskant is not None:
        lines.append(f"diskant   {'pass' if rep.diskant.holds else 'FAIL'}  deficit >= {float(rep.diskant.deficit.lo):.12g}")
    if rep.bonnesen is not None:
        lines.append(f"bonnesen  {'pass' if rep.bonnesen.holds else 'FAIL'}")
    _emit(payload, args.json, "\n".join(lines) + "\n")
    if not rep.passed:
        return EXIT_UNDECIDED if rep.undecided else EXIT_VIOLATION
    return EXIT_OK


def cmd_radii(args) -> int:
    P, Q = (jsonio.load_polytope(p) for p in args.files)
    rin, rout = inradius(P, Q), outradius(P, Q)
    payload = {
        "t": format_rational(rin.t_star),
        "x": [format_rational(c) for c in rin.translation],
        "R": format_rational(rout.t_star),
        "R_translation": [format_rational(c) for c in rout.translation],
        "dual": [format_rational(y) for y in rin.dual_certificate],
    }
    text = f"r = {rin.t_star}  x = ({', '.join(str(c) for c in rin.translation)})\nR = {rout.t_star}\n"
    _emit(payload, args.json, text)
    return EXIT_OK


def cmd_derivative(args) -> int:
    P, Q = (jsonio.load_polytope(p) for p in args.files)
    rep = derivative_report(P, Q)
    text = (
        f"t-coefficient of vol(P+tQ) = {Fraction(rep['t_coefficient'])}\n"
        f"d * V(P[d-1], Q)          = {Fraction(rep['d_times_mixed_volume'])}\n"
        f"{rep['status']}\n"
    )
    _emit(rep, args.json, text)
    return EXIT_OK if rep["status"] != FAIL else EXIT_VIOLATION


def cmd_generate(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    polys = random_polytopes(args.seed, args.dim, args.max_vertices, args.count)
    width = max(3, len(str(args.count - 1)))
    for k, P in enumerate(polys):
        jsonio.save_polytope(P, out / f"poly_{k:0{width}d}.json")
    print(f"wrote {len(polys)} polytopes to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nefcalc", description="Exact intersection-number inequalities for polytope pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, nargs="+"):
        p = sub.add_parser(name, help=help_)
        p.add_argument("files", nargs=nargs)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("mixedvol", cmd_mixedvol, "mixed volume of d polytopes, or the sequence of a pair")
    add("sequence", cmd_sequence, "intersection sequence of a pair", nargs=2)
    for name, func, help_ in (
        ("verify", cmd_verify, "run every applicable inequality check"),
        ("bounds", cmd_bounds, "inradius/outradius, Diskant and Bonnesen bounds"),
    ):
        p = add(name, func, help_)
        p.add_argument("--precision-bits", type=int, default=None, help="cap for certified refinement")
        p.add_argument("--slope", default=None, help="slope override as 'p/q'")
        if name == "bounds":
            p.add_argument("--width-bits", type=int, default=64, help="report intervals narrower than 2^-N")
    add("radii", cmd_radii, "LP inradius and outradius", nargs=2)
    add("derivative", cmd_derivative, "check d/dt vol(P+tQ) at 0 against the mixed volume", nargs=2)

    g = sub.add_parser("generate", help="write seeded random polytopes")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--max-vertices", type=int, default=8)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--out", default="polytopes")
    g.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PrecisionExhausted as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except NefcalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
