"""Exception hierarchy.

Domain rejections (a valid request the mathematics says no to) and numeric
verification failures are kept apart so callers, and the CLI exit codes,
can tell them apart.
"""


class ConformalError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(ConformalError, ValueError):
    pass


class NotOnQuadric(ConformalError, ValueError):
    pass


class NotOrthogonal(ConformalError, ValueError):
    """Matrix fails M^T J M = J."""


class DomainError(ConformalError, ValueError):
    """Well-formed input rejected on mathematical grounds."""


class InvalidHypersurface(DomainError):
    pass


class InvalidSurface(DomainError):
    pass


class SignMismatch(DomainError):
    pass


class UndefinedPoint(DomainError):
    """Affine image lands at infinity."""


class NumericalError(ConformalError, ArithmeticError):
    """A floating-point construction failed its residual check, or a
    tolerance decision was too close to call."""
