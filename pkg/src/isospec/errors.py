"""Exception types shared across the library."""

from __future__ import annotations

__all__ = [
    "IsospecError",
    "BasisMismatchError",
    "StepMismatchError",
    "ParameterError",
    "DegenerateSpectrumError",
    "SubspaceOverflowError",
]


class IsospecError(Exception):
    """Base class for all library errors."""


class BasisMismatchError(IsospecError):
    """Polynomials (or bases) that cannot be combined as requested."""


class StepMismatchError(IsospecError):
    """Shift operators over different lattice steps cannot be combined."""


class ParameterError(IsospecError):
    """Inadmissible operator or family parameters (including a zero step)."""


class DegenerateSpectrumError(IsospecError):
    """Repeated diagonal entries: eigenvectors are not solved for."""


class SubspaceOverflowError(IsospecError):
    """An operator left the degree-bounded space it was restricted to."""

    def __init__(self, message: str, degree: int | None = None):
        super().__init__(message)
        self.degree = degree
