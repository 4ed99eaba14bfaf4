# modules/errors.py
"""Kütüphane genelindeki hata sınıfları"""


class MacdonaldError(Exception):
    """Tüm hesaplama hatalarının ortak tabanı"""


class DenominatorOverflowError(MacdonaldError):
    pass


class DivisionByZeroError(MacdonaldError, ZeroDivisionError):
    pass


class UnknownTypeError(MacdonaldError, KeyError):
    pass


class LatticeMismatchError(MacdonaldError):
    pass


class NotARootError(MacdonaldError):
    pass


class NotDivisibleError(MacdonaldError):
    pass


class NotJDominantError(MacdonaldError):
    pass


class NoUniqueMaximumError(MacdonaldError):
    pass


class UnsupportedTypeError(MacdonaldError):
    pass


class InvalidCharacterError(MacdonaldError):
    pass


class NonExpandableError(MacdonaldError):
    pass


class PoleAtPointError(MacdonaldError):
    pass


class SpectralCollisionError(MacdonaldError):
    pass


class TriangularityError(MacdonaldError):
    pass


class PreconditionError(MacdonaldError):
    pass


class NotWJInvariantError(MacdonaldError):
    pass


class NotSphericalError(MacdonaldError):
    pass


class SingularMatrixError(MacdonaldError):
    pass


class CoordinatesNotPolynomialError(MacdonaldError):
    pass


class InvariantViolationError(MacdonaldError):
    """Teoride garanti edilen bir eşitlik sağlanmadı"""


class UsageError(MacdonaldError):
    pass
