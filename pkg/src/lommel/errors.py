"""Exception types shared across the package.

Exit-code mapping used by the CLI: parameter problems are usage errors
(exit 2), numerical breakdowns are exit 3.
"""
from __future__ import annotations


class LommelError(Exception):
    """Base class for all package errors."""


class AdmissibilityError(LommelError, ValueError):
    """Parameters outside the admissible region (mu <= -1 or a Pochhammer
    denominator hits a nonpositive integer)."""


class DegeneratePrefactorError(LommelError, ValueError):
    """The normalizing prefactor vanishes, so the unnormalized function is
    undefined for these parameters."""


class ConvergenceError(LommelError, ArithmeticError):
    """Series did not meet the truncation rule within the iteration cap, or
    the partial sums overflowed."""


class BracketingError(LommelError, RuntimeError):
    """A root bracket failed to behave as required."""


class NoSignChangeError(BracketingError):
    """Refinement was asked to work on a bracket without a sign change."""


class ScanMissError(BracketingError):
    """The scan found fewer zeros than requested.

    Carries the partial zero table so callers can still emit what was found.
    """

    def __init__(self, message: str, partial=None) -> None:
        super().__init__(message)
        self.partial = partial


class DomainError(LommelError, ValueError):
    """Evaluation left the domain where the requested quantity is defined
    (for example a ratio with a vanishing denominator on the grid)."""
