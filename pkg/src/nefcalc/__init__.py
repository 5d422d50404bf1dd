"""Exact intersection sequences of polytope pairs and the inequalities they satisfy."""
from .bounds import (
    bonnesen_check,
    bounds_report,
    diskant_check,
    inradius_bounds,
    outradius_bounds,
    proportionality_test,
    radius_chain,
)
from .certified import CertifiedReal, Verdict, compare_certified
from .errors import (
    DegenerateInput,
    DomainError,
    InvalidInput,
    NefcalcError,
    NotBig,
    PrecisionExhausted,
    Unbounded,
    UnrealizableSequence,
)
from .mixedvol import NefSequence, intersection_sequence, mixed_volume, volume, volume_polynomial
from .nefseq import check_equality_conditions, check_kt_power, check_log_concavity, check_minkowski
from .polytope import Polytope, hull, linear_combination, minkowski_sum, scale, support
from .radii import inradius, outradius, slope

__all__ = [
    "CertifiedReal", "DegenerateInput", "DomainError", "InvalidInput", "NefSequence",
    "NefcalcError", "NotBig", "Polytope", "PrecisionExhausted", "Unbounded",
    "UnrealizableSequence", "Verdict", "bonnesen_check", "bounds_report",
    "check_equality_conditions", "check_kt_power", "check_log_concavity", "check_minkowski",
    "compare_certified", "diskant_check", "hull", "inradius", "inradius_bounds",
    "intersection_sequence", "linear_combination", "minkowski_sum", "mixed_volume",
    "outradius", "outradius_bounds", "proportionality_test", "radius_chain", "scale",
    "slope", "support", "volume", "volume_polynomial",
]
