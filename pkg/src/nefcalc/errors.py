"""Exception hierarchy shared by every nefcalc module."""


class NefcalcError(Exception):
    """Base class for all library errors."""


class InvalidInput(NefcalcError, ValueError):
    """Malformed or inconsistent arguments (wrong dimension, empty input, floats)."""


class DegenerateInput(NefcalcError, ValueError):
    """A full-dimensional polytope was required but the input is flat."""


class NotBig(NefcalcError, ValueError):
    """A top self-intersection vanishes where positivity is required."""


class UnrealizableSequence(NefcalcError, ValueError):
    """The sequence violates Khovanskii-Teissier, so no nef-big pair produces it."""


class DomainError(NefcalcError, ArithmeticError):
    """Fractional power of a negative quantity, or division by exact zero."""


class Unbounded(NefcalcError, ArithmeticError):
    """A linear program has no finite optimum."""


class PrecisionExhausted(NefcalcError, ArithmeticError):
    """Interval refinement hit the precision cap without deciding."""
