"""Exception types shared across the package."""


class QDysonError(ValueError):
    """Base class for all errors raised by qdyson."""


class NonExactDivision(QDysonError):
    """A Laurent polynomial division left a nonzero remainder."""


class ZeroDenominator(QDysonError):
    pass


class RingMismatch(QDysonError):
    """Operands live in polynomial rings of different dimension."""


class DimensionMismatch(QDysonError):
    pass


class NotAMonomial(QDysonError):
    pass


class NegativePart(QDysonError):
    pass


class IndexOutOfRange(QDysonError):
    pass


class SizeMismatch(QDysonError):
    pass


class BadShape(QDysonError):
    pass


class RangeViolation(QDysonError):
    pass


class PoleAtPoint(ZeroDivisionError, QDysonError):
    """A reciprocal factor vanishes at the requested evaluation point."""
