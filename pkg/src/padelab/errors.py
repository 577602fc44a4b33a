"""Exception hierarchy.

Callers mostly care about two families. InputError means the caller handed
us something malformed: a bad literal, a document that does not match its
schema, an out-of-range index. DomainError means the input was well formed
but the computation ran into a mathematically degenerate situation: a
singular linear system, a vanishing Hankel determinant, an evaluation too
close to a pole. The command line maps InputError to exit code 2 and
DomainError to exit code 1.
"""

from __future__ import annotations


class PadelabError(Exception):
    """Base class for every error raised by this package."""


class InputError(PadelabError):
    """Malformed input: bad literal, bad document, out-of-range request."""


class SchemaError(InputError):
    """A JSON document does not match its schema.

    The offending location is recorded as a JSONPath-style string so command
    line error messages can point at the exact field.
    """

    def __init__(self, message: str, path: str = "$") -> None:
        super().__init__(f"{message} (at {path})")
        self.path = path


class UnknownBuiltinError(InputError):
    """A builtin series or continued fraction name is not recognized."""


class InsufficientCoefficientsError(InputError):
    """An operation needs more series coefficients than are available."""


class ConvergentIndexError(InputError):
    """A convergent index lies outside the term list of a finite fraction."""


class DomainError(PadelabError):
    """Mathematically degenerate situation discovered mid-computation."""


class OriginPoleError(DomainError):
    """Series expansion requested around 0 for a quotient with den(0) = 0."""


class PoleEvaluationError(DomainError):
    """Exact evaluation hit an exact root of the denominator."""


class NearPoleError(DomainError):
    """Floating evaluation came within epsilon of a denominator root.

    The magnitude of the denominator value is kept for diagnostics.
    """

    def __init__(self, message: str, magnitude: float = 0.0) -> None:
        super().__init__(message)
        self.magnitude = magnitude


class IndeterminateTruncationError(DomainError):
    """Backward evaluation of a continued fraction divided by ~0."""

    def __init__(self, message: str, level: int = -1) -> None:
        super().__init__(message)
        self.level = level


class DegenerateSequenceError(DomainError):
    """A convergent sequence admits no continued fraction at some index."""

    def __init__(self, message: str, index: int = -1) -> None:
        super().__init__(message)
        self.index = index


class NonNormalWindowError(DomainError):
    """A Hankel determinant needed as a divisor is zero."""


class RowNotNormalError(DomainError):
    """A row operation requires normal entries but hit a block."""


class RootFindingError(DomainError):
    """Polynomial root refinement failed its residual contract."""


class NonFiniteError(DomainError):
    """A floating computation produced NaN or infinity."""
