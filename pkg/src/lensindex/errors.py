"""Exception hierarchy.

Every error raised on bad input derives from ``LensIndexError``, which is a
``ValueError`` so callers that only care about "invalid input" can catch that.
"""

from __future__ import annotations

from fractions import Fraction


class LensIndexError(ValueError):
    """Base class for all validation errors in this package."""


class BadModulus(LensIndexError):
    pass


class NotCoprime(LensIndexError):
    pass


class OutOfRange(LensIndexError):
    pass


class TrivialClass(LensIndexError):
    pass


class EpsTooLarge(LensIndexError):
    def __init__(self, eps: Fraction, bound: Fraction) -> None:
        super().__init__(f"eps={eps} must satisfy 0 < eps < {bound}")
        self.eps = eps
        self.bound = bound


class DimensionMismatch(LensIndexError):
    pass


class UnresolvedWinding(LensIndexError):
    pass


class NotSymplectic(LensIndexError):
    pass


class EmptyTable(LensIndexError):
    pass


class OnSpectrum(LensIndexError):
    pass


class BadParams(LensIndexError):
    pass


class BadSpectrum(LensIndexError):
    pass


class PinchingFails(LensIndexError):
    pass
